#pragma once

#include <Eigen/Dense>

namespace graphpri {

struct EigSym {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // columns match values
};

// Symmetric eigendecomposition (the input is symmetrized first to shed
// roundoff asymmetry). Throws std::runtime_error if the solver fails.
EigSym eig_sym(const Eigen::MatrixXd& m);

// Eigenvalues only, ascending.
Eigen::VectorXd eig_sym_values(const Eigen::MatrixXd& m);

// Matrix logarithm restricted to the eigenspace with eigenvalue > cutoff;
// the rest contributes zero. For positive semidefinite inputs.
Eigen::MatrixXd psd_log(const Eigen::MatrixXd& m, double cutoff = 1e-12);

}  // namespace graphpri
