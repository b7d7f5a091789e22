#include "graphpri/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "graphpri/linalg.hpp"
#include "graphpri/rng.hpp"

namespace graphpri {

namespace {

int kept_count(const Graph& g, double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw std::invalid_argument("ratio must be in [0,1], got " +
                                    std::to_string(ratio));
    }
    return static_cast<int>(
        std::ceil(ratio * static_cast<double>(g.edge_count()) - 1e-12));
}

}  // namespace

EdgeSelection random_sparsifier(const Graph& g, double ratio,
                                std::uint64_t seed) {
    const int m = g.edge_count();
    const int k = kept_count(g, ratio);
    RandomStream rng(derive_seed(seed, "random-sparsifier"));
    std::vector<int> idx(static_cast<size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    // partial Fisher-Yates: first k entries are the sample
    for (int i = 0; i < k; ++i) {
        const int j =
            static_cast<int>(rng.uniform_int(i, static_cast<std::int64_t>(m) - 1));
        std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    EdgeSelection w = EdgeSelection::Zero(m);
    for (int i = 0; i < k; ++i) w[idx[static_cast<size_t>(i)]] = 1.0;
    return w;
}

EdgeSelection local_degree_sparsifier(const Graph& g, double exponent) {
    if (!(exponent >= 0.0 && exponent <= 1.0)) {
        throw std::invalid_argument("exponent must be in [0,1], got " +
                                    std::to_string(exponent));
    }
    const int n = g.node_count();
    const Eigen::VectorXi deg = g.unweighted_degrees();
    // incident edge ids per node
    std::vector<std::vector<int>> incident(static_cast<size_t>(n));
    for (int m = 0; m < g.edge_count(); ++m) {
        incident[static_cast<size_t>(g.edge(m).u)].push_back(m);
        incident[static_cast<size_t>(g.edge(m).v)].push_back(m);
    }
    EdgeSelection w = EdgeSelection::Zero(g.edge_count());
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 0) continue;
        const int keep = std::min<int>(
            deg[v],
            static_cast<int>(std::floor(
                std::pow(static_cast<double>(deg[v]), exponent) + 1e-9)));
        auto& edges = incident[static_cast<size_t>(v)];
        std::sort(edges.begin(), edges.end(), [&](int a, int b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            const int na = ea.u == v ? ea.v : ea.u;
            const int nb = eb.u == v ? eb.v : eb.u;
            if (deg[na] != deg[nb]) return deg[na] > deg[nb];
            return na < nb;
        });
        for (int i = 0; i < keep; ++i) w[edges[static_cast<size_t>(i)]] = 1.0;
    }
    return w;
}

EdgeSelection local_similarity_sparsifier(const Graph& g, double ratio) {
    const int n = g.node_count();
    const int m = g.edge_count();
    const int k = kept_count(g, ratio);
    const auto& adj = g.neighbors();

    // closed neighborhoods, sorted
    std::vector<std::vector<int>> closed(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        closed[static_cast<size_t>(v)] = adj[static_cast<size_t>(v)];
        closed[static_cast<size_t>(v)].push_back(v);
        std::sort(closed[static_cast<size_t>(v)].begin(),
                  closed[static_cast<size_t>(v)].end());
    }
    auto jaccard = [&](int a, int b) {
        const auto& sa = closed[static_cast<size_t>(a)];
        const auto& sb = closed[static_cast<size_t>(b)];
        size_t i = 0, j = 0, inter = 0;
        while (i < sa.size() && j < sb.size()) {
            if (sa[i] == sb[j]) {
                ++inter;
                ++i;
                ++j;
            } else if (sa[i] < sb[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        const size_t uni = sa.size() + sb.size() - inter;
        return uni == 0 ? 0.0
                        : static_cast<double>(inter) / static_cast<double>(uni);
    };

    std::vector<double> score(static_cast<size_t>(m));
    std::vector<std::vector<int>> incident(static_cast<size_t>(n));
    for (int e = 0; e < m; ++e) {
        score[static_cast<size_t>(e)] = jaccard(g.edge(e).u, g.edge(e).v);
        incident[static_cast<size_t>(g.edge(e).u)].push_back(e);
        incident[static_cast<size_t>(g.edge(e).v)].push_back(e);
    }

    // per-node normalized rank of each incident edge; an edge keeps the best
    // (smallest) of its two ranks
    std::vector<double> key(static_cast<size_t>(m), 2.0);
    for (int v = 0; v < n; ++v) {
        auto& edges = incident[static_cast<size_t>(v)];
        if (edges.empty()) continue;
        std::sort(edges.begin(), edges.end(), [&](int a, int b) {
            if (score[static_cast<size_t>(a)] != score[static_cast<size_t>(b)]) {
                return score[static_cast<size_t>(a)] >
                       score[static_cast<size_t>(b)];
            }
            return a < b;
        });
        const double deg = static_cast<double>(edges.size());
        for (size_t r = 0; r < edges.size(); ++r) {
            const double normalized = static_cast<double>(r + 1) / deg;
            auto& slot = key[static_cast<size_t>(edges[r])];
            slot = std::min(slot, normalized);
        }
    }

    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (key[static_cast<size_t>(a)] != key[static_cast<size_t>(b)]) {
            return key[static_cast<size_t>(a)] < key[static_cast<size_t>(b)];
        }
        return a < b;
    });
    EdgeSelection w = EdgeSelection::Zero(m);
    for (int i = 0; i < k; ++i) w[order[static_cast<size_t>(i)]] = 1.0;
    return w;
}

Eigen::VectorXd effective_resistances(const Graph& g) {
    const int n = g.node_count();
    if (g.edge_count() == 0) return Eigen::VectorXd(0);
    const EigSym eig = eig_sym(g.laplacian());
    const int nullity = g.component_count();  // exact kernel dimension
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
    for (int i = nullity; i < n; ++i) inv[i] = 1.0 / eig.values[i];
    const Eigen::MatrixXd pinv =
        eig.vectors * inv.asDiagonal() * eig.vectors.transpose();
    Eigen::VectorXd r(g.edge_count());
    for (int m = 0; m < g.edge_count(); ++m) {
        const Edge& e = g.edge(m);
        r[m] = pinv(e.u, e.u) + pinv(e.v, e.v) - 2.0 * pinv(e.u, e.v);
    }
    return r;
}

EdgeSelection effective_resistance_sparsifier(const Graph& g, double ratio,
                                              std::uint64_t seed) {
    const int m = g.edge_count();
    const int k = kept_count(g, ratio);
    Eigen::VectorXd r = effective_resistances(g);
    std::vector<double> q(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        q[static_cast<size_t>(i)] = std::max(0.0, g.edge(i).weight * r[i]);
    }
    RandomStream rng(derive_seed(seed, "resistance-sparsifier"));
    EdgeSelection w = EdgeSelection::Zero(m);
    for (int pick = 0; pick < k; ++pick) {
        double total = std::accumulate(q.begin(), q.end(), 0.0);
        int chosen = -1;
        if (total > 0.0) {
            const double target = rng.uniform01() * total;
            double acc = 0.0;
            for (int i = 0; i < m; ++i) {
                if (q[static_cast<size_t>(i)] <= 0.0) continue;
                acc += q[static_cast<size_t>(i)];
                if (acc >= target) {
                    chosen = i;
                    break;
                }
            }
            if (chosen < 0) {  // roundoff spill: take the last positive mass
                for (int i = m - 1; i >= 0; --i) {
                    if (q[static_cast<size_t>(i)] > 0.0) {
                        chosen = i;
                        break;
                    }
                }
            }
        } else {  // remaining edges all have zero resistance mass
            int left = 0;
            for (int i = 0; i < m; ++i) {
                if (w[i] == 0.0) ++left;
            }
            std::int64_t step = rng.uniform_int(0, left - 1);
            for (int i = 0; i < m; ++i) {
                if (w[i] == 0.0 && step-- == 0) {
                    chosen = i;
                    break;
                }
            }
        }
        w[chosen] = 1.0;
        q[static_cast<size_t>(chosen)] = 0.0;
    }
    return w;
}

}  // namespace graphpri
