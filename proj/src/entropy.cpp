#include "graphpri/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "graphpri/linalg.hpp"

namespace graphpri {

namespace {
double entropy_from_values(const Eigen::VectorXd& vals) {
    double s = 0.0;
    for (int i = 0; i < vals.size(); ++i) {
        const double x = vals[i];
        if (x > kEntropyEigCutoff) s -= x * std::log(x);
    }
    return s;
}
}  // namespace

double entropy_of_spectrum(const DensitySpectrum& s) {
    return entropy_from_values(s.eigenvalues);
}

double von_neumann_entropy(const DensityMatrix& d) {
    return entropy_from_values(eig_sym_values(d.values()));
}

double von_neumann_entropy(const Graph& g) {
    return von_neumann_entropy(trace_normalize(g.laplacian()));
}

double qjs_divergence(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch: " +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    }
    const Eigen::MatrixXd mix = 0.5 * (a.values() + b.values());
    const double s_mix = entropy_from_values(eig_sym_values(mix));
    return s_mix - 0.5 * von_neumann_entropy(a) - 0.5 * von_neumann_entropy(b);
}

double pri_objective(const DensityMatrix& sigma, const DensityMatrix& rho,
                     double beta) {
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("beta must be nonnegative, got " +
                                    std::to_string(beta));
    }
    if (sigma.dim() != rho.dim()) {
        throw std::invalid_argument("dimension mismatch: " +
                                    std::to_string(sigma.dim()) + " vs " +
                                    std::to_string(rho.dim()));
    }
    const Eigen::MatrixXd mix = 0.5 * (sigma.values() + rho.values());
    return (1.0 - beta) * von_neumann_entropy(sigma) +
           2.0 * beta * entropy_from_values(eig_sym_values(mix));
}

double shannon_degree_entropy(const Graph& g) {
    const Eigen::VectorXd d = g.degrees();
    const double total = d.sum();
    if (!(total > 0.0)) {
        throw empty_graph_error("degree entropy needs at least one edge");
    }
    double h = 0.0;
    for (int i = 0; i < d.size(); ++i) {
        const double p = d[i] / total;
        if (p > kEntropyEigCutoff) h -= p * std::log(p);
    }
    return h;
}

EntropyGapBound entropy_gap_bound(const Graph& g) {
    if (g.edge_count() == 0) {
        throw empty_graph_error("gap bound needs at least one edge");
    }
    EntropyGapBound out;
    out.shannon = shannon_degree_entropy(g);
    out.von_neumann = von_neumann_entropy(g);
    out.gap = out.shannon - out.von_neumann;

    const Eigen::VectorXd d = g.degrees();
    double min_pos_degree = std::numeric_limits<double>::infinity();
    for (int i = 0; i < d.size(); ++i) {
        if (d[i] > 0.0 && d[i] < min_pos_degree) min_pos_degree = d[i];
    }
    double sum_sq_weights = 0.0;
    for (const Edge& e : g.edges()) sum_sq_weights += e.weight * e.weight;
    // tr(W^2) for symmetric hollow W = 2 * sum of squared edge weights.
    out.upper_bound = 2.0 * sum_sq_weights / (min_pos_degree * d.sum());
    return out;
}

}  // namespace graphpri
