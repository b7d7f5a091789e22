#include "graphpri/incidence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphpri {

IncidenceMatrix::IncidenceMatrix(const Graph& g) {
    const int n = g.node_count();
    const int m = g.edge_count();
    b_ = Eigen::MatrixXd::Zero(n, m);
    head_.reserve(static_cast<size_t>(m));
    tail_.reserve(static_cast<size_t>(m));
    weight_.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Edge& e = g.edge(j);
        const int lo = std::min(e.u, e.v);
        const int hi = std::max(e.u, e.v);
        const double s = std::sqrt(e.weight);
        b_(lo, j) = s;
        b_(hi, j) = -s;
        head_.push_back(lo);
        tail_.push_back(hi);
        weight_.push_back(e.weight);
    }
}

void IncidenceMatrix::check_selection(const EdgeSelection& w) const {
    if (w.size() != edge_count()) {
        throw std::invalid_argument("selection has " + std::to_string(w.size()) +
                                    " entries, incidence has " +
                                    std::to_string(edge_count()) + " columns");
    }
}

Eigen::MatrixXd IncidenceMatrix::subgraph_laplacian(const EdgeSelection& w) const {
    check_selection(w);
    const int n = node_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (int m = 0; m < edge_count(); ++m) {
        const double wm = w[m] * weight_[static_cast<size_t>(m)];
        if (wm == 0.0) continue;
        const int u = head_[static_cast<size_t>(m)];
        const int v = tail_[static_cast<size_t>(m)];
        l(u, u) += wm;
        l(v, v) += wm;
        l(u, v) -= wm;
        l(v, u) -= wm;
    }
    return l;
}

Eigen::VectorXd IncidenceMatrix::selection_degrees(const EdgeSelection& w) const {
    check_selection(w);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(node_count());
    for (int m = 0; m < edge_count(); ++m) {
        const double wm = w[m] * weight_[static_cast<size_t>(m)];
        d[head_[static_cast<size_t>(m)]] += wm;
        d[tail_[static_cast<size_t>(m)]] += wm;
    }
    return d;
}

double IncidenceMatrix::selection_trace(const EdgeSelection& w) const {
    check_selection(w);
    double t = 0.0;
    for (int m = 0; m < edge_count(); ++m) {
        t += 2.0 * w[m] * weight_[static_cast<size_t>(m)];
    }
    return t;
}

double IncidenceMatrix::quad_form(const Eigen::MatrixXd& x, int m) const {
    const int u = head_[static_cast<size_t>(m)];
    const int v = tail_[static_cast<size_t>(m)];
    return weight_[static_cast<size_t>(m)] *
           (x(u, u) + x(v, v) - x(u, v) - x(v, u));
}

}  // namespace graphpri
