#include "graphpri/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "graphpri/graph.hpp"
#include "graphpri/linalg.hpp"

namespace graphpri {

namespace {
void check_symmetric(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix is not square: " +
                                    std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    }
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol) {
        throw std::invalid_argument("matrix is not symmetric (max deviation " +
                                    std::to_string(asym) + ")");
    }
}
}  // namespace

DensityMatrix DensityMatrix::from_normalized(Eigen::MatrixXd m) {
    check_symmetric(m, 1e-10);
    const double tr = m.trace();
    if (std::abs(tr - 1.0) > 1e-8) {
        throw std::invalid_argument("density matrix trace " + std::to_string(tr) +
                                    " is not 1");
    }
    DensityMatrix d;
    d.m_ = std::move(m);
    return d;
}

DensityMatrix trace_normalize(const Eigen::MatrixXd& spsd) {
    check_symmetric(spsd, 1e-10);
    const double tr = spsd.trace();
    if (!(tr > 0.0)) {
        throw empty_graph_error(
            "cannot normalize: trace is " + std::to_string(tr) +
            " (empty graph or all-zero selection)");
    }
    return DensityMatrix::from_normalized(spsd / tr);
}

DensitySpectrum spectrum(const DensityMatrix& d) {
    Eigen::VectorXd vals = eig_sym_values(d.values());
    // ascending -> nonincreasing
    Eigen::VectorXd out(vals.size());
    for (int i = 0; i < vals.size(); ++i) out[i] = vals[vals.size() - 1 - i];
    double sum = 0.0;
    for (int i = 0; i < out.size(); ++i) {
        if (out[i] < 0.0) {
            if (out[i] < -1e-10) {
                throw std::invalid_argument(
                    "matrix is not positive semidefinite (eigenvalue " +
                    std::to_string(out[i]) + ")");
            }
            out[i] = 0.0;
        }
        sum += out[i];
    }
    if (std::abs(sum - 1.0) > 1e-8) {
        throw std::invalid_argument("spectrum sums to " + std::to_string(sum) +
                                    ", expected 1");
    }
    return {out};
}

}  // namespace graphpri
