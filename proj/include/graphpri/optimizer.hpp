#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "graphpri/density.hpp"
#include "graphpri/graph.hpp"
#include "graphpri/incidence.hpp"
#include "graphpri/rng.hpp"

namespace graphpri {

// Degrees below this are clamped inside the connectivity barrier.
inline constexpr double kBarrierDegreeFloor = 1e-12;

struct PriConfig {
    double beta = 1.0;           // divergence weight, >= 0
    double alpha = 0.005;        // connectivity barrier strength, >= 0
    double temperature = 1.0;    // gumbel-softmax temperature, > 0
    double step_size = 0.05;     // Adam learning rate, > 0
    int samples = 5;             // stochastic samples per iteration, >= 1
    int max_iterations = 500;    // >= 0
    std::uint64_t seed = 0;
    bool hard_sampling = true;   // one-hot forward, soft backward
    bool use_degree_entropy_approx = false;  // O(N) surrogate objective
};

void validate(const PriConfig& cfg);

// Logits + Adam accumulators for the edge-selection distribution.
struct OptimizerState {
    Eigen::MatrixXd theta;   // M x 2, column 1 = keep logit
    Eigen::MatrixXd adam_m;  // first-moment accumulator
    Eigen::MatrixXd adam_v;  // second-moment accumulator
    int iteration = 0;
};

// Raised when the objective or the logits stop being finite; the message
// carries the iteration and logit range for post-mortem.
class optimizer_diverged_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One gumbel-softmax sample per edge over {drop, keep}. `w` is the value to
// use downstream (one-hot keep-indicator when hard, keep-probability when
// soft); `soft` is always the relaxed keep-probability, needed for the
// straight-through backward pass. Consumes two gumbel draws per edge, edge 0
// first.
struct GumbelDraw {
    Eigen::VectorXd w;
    Eigen::VectorXd soft;
};

GumbelDraw gumbel_softmax_draw(const Eigen::MatrixXd& theta, double temperature,
                               bool hard, RandomStream& rng);

// Sampled edge selection from logits (the `w` part of gumbel_softmax_draw).
EdgeSelection gumbel_softmax(const Eigen::MatrixXd& theta, double temperature,
                             bool hard, RandomStream& rng);

// Full objective at a selection: entropy + divergence terms against the
// reference state rho plus the log-degree barrier. Uses the degree-entropy
// surrogate when the config says so. Throws empty_graph_error if w keeps
// nothing (zero trace).
double objective_with_barrier(const IncidenceMatrix& inc,
                              const DensityMatrix& rho, const EdgeSelection& w,
                              const PriConfig& cfg);

// Exact gradient of the trace-normalized objective
// (1-b) S(sigma_w/tr) + 2b S((sigma_w/tr + rho)/2) with respect to w,
// without the barrier; rho is the normalized Laplacian of the full graph
// behind `inc` (explicit overload below for reuse). Requires every w_m
// strictly inside (0,1). The radial direction w is in its null space (scale
// invariance), so only simplex-tangential components carry information.
Eigen::VectorXd analytical_gradient(const IncidenceMatrix& inc,
                                    const EdgeSelection& w, double beta);
Eigen::VectorXd analytical_gradient(const IncidenceMatrix& inc,
                                    const DensityMatrix& rho,
                                    const EdgeSelection& w, double beta);

// Gradient of the unnormalized extended entropy -tr(S ln S - S) at
// S = B diag(w) B^T: component m is -b_m^T ln(S) b_m on the positive
// eigenspace.
Eigen::VectorXd entropy_gradient_unnormalized(const IncidenceMatrix& inc,
                                              const EdgeSelection& w);

struct SparsifyReport {
    EdgeSelection selection;             // final mask (0/1 when hard_sampling)
    EdgeSelection soft_selection;        // keep-probabilities softmax(theta)
    std::vector<double> objective_trace; // mean objective per iteration
    int retained_edge_count = 0;
    double wall_time_seconds = 0.0;
    bool empty_selection = false;        // final mask kept no edges
};

// Minimizes the objective over edge-selection logits with Adam and
// gumbel-softmax sampling, then draws the final mask. Deterministic given
// cfg.seed. Throws empty_graph_error for edgeless input and
// optimizer_diverged_error on non-finite state.
SparsifyReport sparsify_pri(const Graph& g, const PriConfig& cfg);

// Deterministic alternatives to the sampled final mask.
EdgeSelection harden_threshold(const EdgeSelection& soft, double threshold);
EdgeSelection harden_top_k(const EdgeSelection& soft, int k);  // ties: lower index

}  // namespace graphpri
