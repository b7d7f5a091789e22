#pragma once

#include "graphpri/graph.hpp"

namespace graphpri {

// All ratio-based sparsifiers keep exactly ceil(ratio * edge_count) edges,
// ratio in [0,1], and return hard masks in the graph's edge order.

// Uniform sample without replacement.
EdgeSelection random_sparsifier(const Graph& g, double ratio,
                                std::uint64_t seed);

// Each node keeps its floor(deg^exponent) incident edges toward the
// highest-degree neighbors (ties: lower neighbor id); kept masks are the
// union over nodes. exponent in [0,1]: 0 keeps one edge per non-isolated
// node, 1 keeps everything.
EdgeSelection local_degree_sparsifier(const Graph& g, double exponent);

// Ranks incident edges per node by Jaccard similarity of closed
// neighborhoods (ties: lower edge id), scores each edge by its best
// normalized rank over the two endpoints, and keeps the globally
// best-scoring ceil(ratio * M) edges (ties: lower edge id).
EdgeSelection local_similarity_sparsifier(const Graph& g, double ratio);

// Effective resistance of every edge via the Laplacian pseudoinverse.
// Satisfies sum_m weight_m * R_m = node_count - component_count.
Eigen::VectorXd effective_resistances(const Graph& g);

// Samples edges without replacement with probability proportional to
// weight * effective resistance.
EdgeSelection effective_resistance_sparsifier(const Graph& g, double ratio,
                                              std::uint64_t seed);

}  // namespace graphpri
