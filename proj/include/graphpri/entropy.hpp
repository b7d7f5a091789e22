#pragma once

#include <Eigen/Dense>

#include "graphpri/density.hpp"
#include "graphpri/graph.hpp"

namespace graphpri {

// Eigenvalues below this contribute nothing to entropies (0 ln 0 := 0).
inline constexpr double kEntropyEigCutoff = 1e-12;

// All entropies and divergences in this library are in nats.

// -sum_i lambda_i ln(lambda_i) over the spectrum of a density matrix.
// Always in [0, ln(dim)].
double von_neumann_entropy(const DensityMatrix& d);
double entropy_of_spectrum(const DensitySpectrum& s);

// Convenience: entropy of the trace-normalized Laplacian of a graph.
double von_neumann_entropy(const Graph& g);

// Quantum Jensen-Shannon divergence S((a+b)/2) - S(a)/2 - S(b)/2.
// Symmetric, nonnegative, bounded by ln 2; its square root is a metric.
double qjs_divergence(const DensityMatrix& a, const DensityMatrix& b);

// The minimized quantity: (1-beta) S(sigma) + 2 beta S((sigma+rho)/2).
// Equals S(sigma) + 2*beta*qjs(sigma,rho) plus the sigma-independent
// constant beta*S(rho).
double pri_objective(const DensityMatrix& sigma, const DensityMatrix& rho,
                     double beta);

// Shannon entropy of the weighted degree distribution d_i / sum(d).
double shannon_degree_entropy(const Graph& g);

// How far the degree entropy sits above the von Neumann entropy, with the
// closed-form upper bound tr(W^2) / (min positive degree * total degree).
// The gap is nonnegative and no larger than the bound for every graph with
// at least one edge.
struct EntropyGapBound {
    double shannon = 0.0;
    double von_neumann = 0.0;
    double gap = 0.0;
    double upper_bound = 0.0;
};

EntropyGapBound entropy_gap_bound(const Graph& g);

}  // namespace graphpri
