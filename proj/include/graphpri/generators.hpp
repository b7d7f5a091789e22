#pragma once

#include <cstdint>
#include <vector>

#include "graphpri/graph.hpp"

namespace graphpri {

// All generators are deterministic in their seed and emit edges sorted by
// (u, v) with u < v, unit weights.

// Erdos-Renyi G(n, p): every unordered pair independently with probability p.
Graph gen_er(int n, double p, std::uint64_t seed);

// Barabasi-Albert preferential attachment: seed clique on m_attach nodes,
// every later node attaches to m_attach distinct existing nodes chosen
// proportionally to current degree. Edge count: C(m_attach,2) +
// (n - m_attach) * m_attach.
Graph gen_ba(int n, int m_attach, std::uint64_t seed);

// Stochastic block model with explicit block sizes; probability p_in inside
// a block, p_out across. Blocks are contiguous node ranges in the given
// order. With p_in == p_out == p this consumes randomness exactly like
// gen_er(n, p, seed) and yields the identical graph.
Graph gen_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
              std::uint64_t seed);

// Ring of n nodes, each tied to its floor(k/2) nearest neighbors on both
// sides. Deterministic; k even gives a k-regular graph with n*k/2 edges.
Graph gen_knn_circle(int n, int k);

// Uniform G(n, m): exactly m distinct edges drawn uniformly.
Graph gen_gnm(int n, int m, std::uint64_t seed);

}  // namespace graphpri
