#include "graphpri/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graphpri/rng.hpp"

namespace graphpri {

namespace {
void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must be in [0,1], got " +
                                    std::to_string(p));
    }
}
}  // namespace

Graph gen_er(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_probability(p, "p");
    RandomStream rng(derive_seed(seed, "gen-er"));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform01() < p) edges.push_back({u, v, 1.0});
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
              std::uint64_t seed) {
    check_probability(p_in, "p_in");
    check_probability(p_out, "p_out");
    int n = 0;
    for (int b : block_sizes) {
        if (b < 0) throw std::invalid_argument("block sizes must be nonnegative");
        n += b;
    }
    std::vector<int> block(static_cast<size_t>(n));
    int node = 0;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        for (int i = 0; i < block_sizes[b]; ++i) {
            block[static_cast<size_t>(node++)] = static_cast<int>(b);
        }
    }
    // same pair order and one uniform per pair as gen_er, so the degenerate
    // case p_in == p_out reproduces it bit for bit
    RandomStream rng(derive_seed(seed, "gen-er"));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double p = block[static_cast<size_t>(u)] ==
                                     block[static_cast<size_t>(v)]
                                 ? p_in
                                 : p_out;
            if (rng.uniform01() < p) edges.push_back({u, v, 1.0});
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_ba(int n, int m_attach, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (m_attach < 1) {
        throw std::invalid_argument("m_attach must be >= 1, got " +
                                    std::to_string(m_attach));
    }
    if (m_attach >= n) {
        throw std::invalid_argument("m_attach must be < n");
    }
    RandomStream rng(derive_seed(seed, "gen-ba"));
    std::vector<Edge> edges;
    // one bag entry per edge endpoint: sampling from it is degree-proportional
    std::vector<int> bag;
    for (int u = 0; u < m_attach; ++u) {
        for (int v = u + 1; v < m_attach; ++v) {
            edges.push_back({u, v, 1.0});
            bag.push_back(u);
            bag.push_back(v);
        }
    }
    for (int v = m_attach; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m_attach) {
            int candidate;
            if (bag.empty()) {
                // no edges yet (m_attach == 1 start): attach uniformly
                candidate = static_cast<int>(rng.uniform_int(0, v - 1));
            } else {
                candidate = bag[static_cast<size_t>(rng.uniform_int(
                    0, static_cast<std::int64_t>(bag.size()) - 1))];
            }
            targets.insert(candidate);
        }
        for (int t : targets) {
            edges.push_back({std::min(t, v), std::max(t, v), 1.0});
            bag.push_back(t);
            bag.push_back(v);
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_knn_circle(int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (n > 0 && k >= n) throw std::invalid_argument("k must be < n");
    const int half = k / 2;
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= half; ++j) {
            const int other = (i + j) % n;
            pairs.insert(std::minmax(i, other));
        }
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& p : pairs) edges.push_back({p.first, p.second, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_gnm(int n, int m, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges) {
        throw std::invalid_argument("m must be in [0, n*(n-1)/2], got " +
                                    std::to_string(m));
    }
    RandomStream rng(derive_seed(seed, "gen-gnm"));
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < m) {
        const int u = static_cast<int>(rng.uniform_int(0, n - 1));
        const int v = static_cast<int>(rng.uniform_int(0, n - 1));
        if (u == v) continue;
        chosen.insert(std::minmax(u, v));
    }
    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (const auto& p : chosen) edges.push_back({p.first, p.second, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace graphpri
