#include "graphpri/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace graphpri {

EigSym eig_sym(const Eigen::MatrixXd& m) {
    Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd eig_sym_values(const Eigen::MatrixXd& m) {
    Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigendecomposition failed");
    }
    return solver.eigenvalues();
}

Eigen::MatrixXd psd_log(const Eigen::MatrixXd& m, double cutoff) {
    EigSym eig = eig_sym(m);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(eig.values.size());
    for (int i = 0; i < eig.values.size(); ++i) {
        if (eig.values[i] > cutoff) f[i] = std::log(eig.values[i]);
    }
    return eig.vectors * f.asDiagonal() * eig.vectors.transpose();
}

}  // namespace graphpri
