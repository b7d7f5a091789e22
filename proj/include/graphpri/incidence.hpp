#pragma once

#include <Eigen/Dense>

#include "graphpri/graph.hpp"

namespace graphpri {

// Signed incidence matrix of a weighted graph. Column m carries +sqrt(mu_m)
// at the lower-indexed endpoint and -sqrt(mu_m) at the higher one (a fixed
// orientation; every quadratic form used here is orientation-invariant).
// Satisfies B * B^T = laplacian exactly up to roundoff.
class IncidenceMatrix {
public:
    explicit IncidenceMatrix(const Graph& g);

    const Eigen::MatrixXd& values() const { return b_; }
    int node_count() const { return static_cast<int>(b_.rows()); }
    int edge_count() const { return static_cast<int>(b_.cols()); }

    // Endpoints and weight of column m (u < v).
    int head(int m) const { return head_[static_cast<size_t>(m)]; }
    int tail(int m) const { return tail_[static_cast<size_t>(m)]; }
    double weight(int m) const { return weight_[static_cast<size_t>(m)]; }

    // Laplacian of the selection-weighted subgraph, B diag(w) B^T, assembled
    // by direct accumulation so binary masks reproduce the plain Laplacian of
    // the kept edges exactly. Linear in w.
    Eigen::MatrixXd subgraph_laplacian(const EdgeSelection& w) const;

    // Diagonal of subgraph_laplacian(w): per-node selection-weighted degree.
    Eigen::VectorXd selection_degrees(const EdgeSelection& w) const;

    // Trace of subgraph_laplacian(w) = sum_m 2 mu_m w_m.
    double selection_trace(const EdgeSelection& w) const;

    // b_m^T X b_m for symmetric X, in O(1) per edge.
    double quad_form(const Eigen::MatrixXd& x, int m) const;

private:
    void check_selection(const EdgeSelection& w) const;

    Eigen::MatrixXd b_;
    std::vector<int> head_, tail_;
    std::vector<double> weight_;
};

}  // namespace graphpri
