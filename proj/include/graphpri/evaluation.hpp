#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "graphpri/graph.hpp"
#include "graphpri/optimizer.hpp"

namespace graphpri {

// --- metrics ---------------------------------------------------------------

// Unit eigenvector of the second-smallest Laplacian eigenvalue, sign fixed so
// the first entry with magnitude > 1e-12 is positive. Throws
// disconnected_graph_error when lambda_2 <= 1e-10.
Eigen::VectorXd fiedler_vector(const Eigen::MatrixXd& laplacian);

// Geodesic-style distance between two Laplacians probed along x:
// arccosh(1 + |(rho-sigma)x|^2 |x|^2 / (2 x'rho x x'sigma x)).
// Scale-sensitive by design. Returns +infinity when either quadratic form
// is <= 1e-12 (x sits in a near-nullspace); callers flag these separately.
double spectral_distance(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma,
                         const Eigen::VectorXd& x);

// Freeman degree centralization: sum_i (max_j d_j - d_i) / ((N-1)(N-2)),
// unweighted degrees. 1 for stars, 0 for regular graphs. Requires N >= 3.
double centralization(const Graph& g);

// --- harness ---------------------------------------------------------------

struct MetricStat {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 when count < 2
    int count = 0;
};

struct CurvePoint {
    double x = 0.0;
    std::string method;  // empty outside method comparisons
    std::map<std::string, MetricStat> metrics;
};

// Known metric names; harness outputs never invent others.
const std::vector<std::string>& metric_registry();

// Random sparsification at each ratio, replicated; reports mean entropy of
// the kept subgraph and mean divergence from the original.
std::vector<CurvePoint> tradeoff_curve(const Graph& g,
                                       const std::vector<double>& ratios,
                                       int replicates, std::uint64_t seed);

// Mean retained edge count per beta (grid must be ascending); cfg supplies
// everything but beta and seed, cfg.seed acts as the root seed.
std::vector<CurvePoint> beta_sparsity_curve(const Graph& g,
                                            const std::vector<double>& beta_grid,
                                            int replicates, const PriConfig& cfg);

struct AssumptionRow {
    double target_degree = 0.0;
    double percent_nonnegative = 0.0;  // of single-edge additions raising entropy
    double percent_stddev = 0.0;       // across replicate graphs
    int graphs_used = 0;
    long long pairs_checked = 0;
};

// For ER graphs at each target mean degree: fraction of absent node pairs
// whose addition does not decrease the von Neumann entropy, averaged over
// replicate graphs (graphs with no edges or no absent pairs are skipped and
// reflected in graphs_used).
std::vector<AssumptionRow> assumption_check(
    int n, const std::vector<double>& target_mean_degrees, int replicates,
    std::uint64_t seed);

// Randomly sparsify once, then re-add single removed edges: fraction of
// trials where the divergence from the original does not increase.
// Returns 1 when nothing was removed.
double corollary_check(const Graph& g, double sparsify_ratio, int trials,
                       std::uint64_t seed);

// Per method and ratio: mean spectral distance to the original (probed along
// the original graph's Fiedler vector, fixed for the whole comparison), mean
// centralization of the kept subgraph, mean retained edges, and the fraction
// of replicates hitting the +infinity distance sentinel. The PRI method is
// trained once per replicate and cut to each ratio by keep-probability;
// local_degree picks the exponent whose kept count lands closest to the
// ratio.
std::vector<CurvePoint> sparsifier_comparison(const Graph& g,
                                              const std::vector<std::string>& methods,
                                              const std::vector<double>& ratios,
                                              int replicates, std::uint64_t seed,
                                              const PriConfig& cfg);

// --- artifacts ---------------------------------------------------------------

// CSV with provenance comments; fixed columns x,metric,mean,std,n,seed.
// Byte-deterministic for identical inputs and build.
std::string curve_csv(const std::vector<CurvePoint>& points,
                      const std::string& suite, std::uint64_t seed,
                      const std::string& config_summary);

// JSON mirror of the same rows plus the provenance block.
std::string curve_json(const std::vector<CurvePoint>& points,
                       const std::string& suite, std::uint64_t seed,
                       const std::string& config_summary);

}  // namespace graphpri
