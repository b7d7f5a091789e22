#pragma once

#include <Eigen/Dense>

namespace graphpri {

// Trace-one symmetric positive semidefinite matrix (a graph state). Obtained
// from a Laplacian-like matrix via trace_normalize; construction checks the
// invariants (symmetry within 1e-10 after scaling, positive trace).
class DensityMatrix {
public:
    static DensityMatrix from_normalized(Eigen::MatrixXd m);

    const Eigen::MatrixXd& values() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

private:
    Eigen::MatrixXd m_;
};

// Divides a symmetric PSD matrix by its trace. Throws empty_graph_error when
// the trace is not positive (an all-zero selection / empty graph), and
// std::invalid_argument for non-square or asymmetric input.
DensityMatrix trace_normalize(const Eigen::MatrixXd& spsd);

// Eigenvalues of a density matrix, nonincreasing. Values in [-1e-10, 0) are
// clamped to zero; anything below that fails the PSD invariant.
struct DensitySpectrum {
    Eigen::VectorXd eigenvalues;
};

DensitySpectrum spectrum(const DensityMatrix& d);

}  // namespace graphpri
