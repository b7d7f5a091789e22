#include "graphpri/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphpri/baselines.hpp"
#include "graphpri/density.hpp"
#include "graphpri/entropy.hpp"
#include "graphpri/evaluation.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/graph.hpp"
#include "graphpri/incidence.hpp"
#include "graphpri/linalg.hpp"
#include "graphpri/optimizer.hpp"
#include "graphpri/rng.hpp"

namespace graphpri {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Graph random_weighted_graph(std::uint64_t seed, int n, double p,
                            bool require_connected = false,
                            bool forbid_isolated = false) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = gen_er(n, p, derive_seed(seed, "rw-graph", attempt));
        if (g.edge_count() == 0) continue;
        if (require_connected && !g.is_connected()) continue;
        if (forbid_isolated && g.degrees().minCoeff() <= 0.0) continue;
        RandomStream rng(derive_seed(seed, "rw-weights", attempt));
        std::vector<Edge> edges = g.edges();
        for (Edge& e : edges) e.weight = 0.5 + 2.5 * rng.uniform01();
        return Graph::from_edges(n, std::move(edges));
    }
}

DensityMatrix random_density(RandomStream& rng, int n) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    }
    Eigen::MatrixXd m = a.transpose() * a;
    m = 0.5 * (m + m.transpose());
    return trace_normalize(m);
}

double extended_entropy(const Eigen::MatrixXd& psd) {
    const Eigen::VectorXd vals = eig_sym_values(psd);
    double e = 0.0;
    for (int i = 0; i < vals.size(); ++i) {
        if (vals[i] > kEntropyEigCutoff) e -= vals[i] * std::log(vals[i]) - vals[i];
    }
    return e;
}

using Check = PropertyResult (*)(std::uint64_t);

PropertyResult check_subgraph_laplacian_oracle(std::uint64_t seed) {
    double worst = 0.0;
    RandomStream rng(derive_seed(seed, "oracle-mask"));
    for (int t = 0; t < 20; ++t) {
        const int n = 5 + t;
        const Graph g = random_weighted_graph(derive_seed(seed, "oracle", t), n, 0.4);
        const IncidenceMatrix inc(g);
        EdgeSelection w(g.edge_count());
        for (int m = 0; m < w.size(); ++m) w[m] = rng.uniform01() < 0.5 ? 0.0 : 1.0;
        const Eigen::MatrixXd direct =
            inc.values() * w.asDiagonal() * inc.values().transpose();
        const Eigen::MatrixXd fast = inc.subgraph_laplacian(w);
        worst = std::max(worst, (direct - fast).cwiseAbs().maxCoeff());
        const Eigen::MatrixXd rebuilt = g.induced_by(w).laplacian();
        worst = std::max(worst, (rebuilt - fast).cwiseAbs().maxCoeff());
    }
    return {"subgraph-laplacian-oracle", worst <= 1e-12,
            "max deviation " + num(worst)};
}

PropertyResult check_incidence_factorization(std::uint64_t seed) {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Graph g =
            random_weighted_graph(derive_seed(seed, "fact", t), 6 + t, 0.5);
        const IncidenceMatrix inc(g);
        const Eigen::MatrixXd bbT = inc.values() * inc.values().transpose();
        worst = std::max(worst, (bbT - g.laplacian()).cwiseAbs().maxCoeff());
    }
    return {"incidence-factorization", worst <= 1e-9,
            "max |BB^T - L| = " + num(worst)};
}

PropertyResult check_selection_linearity(std::uint64_t seed) {
    double worst = 0.0;
    RandomStream rng(derive_seed(seed, "lin-mask"));
    for (int t = 0; t < 10; ++t) {
        const Graph g =
            random_weighted_graph(derive_seed(seed, "lin", t), 12, 0.5);
        const IncidenceMatrix inc(g);
        EdgeSelection w1(g.edge_count()), w2(g.edge_count());
        for (int m = 0; m < w1.size(); ++m) {
            w1[m] = rng.uniform01();
            w2[m] = rng.uniform01();
        }
        const double a = rng.uniform01();
        const Eigen::MatrixXd mixed =
            inc.subgraph_laplacian(a * w1 + (1.0 - a) * w2);
        const Eigen::MatrixXd combo = a * inc.subgraph_laplacian(w1) +
                                      (1.0 - a) * inc.subgraph_laplacian(w2);
        worst = std::max(worst, (mixed - combo).cwiseAbs().maxCoeff());
    }
    return {"selection-linearity", worst <= 1e-12, "max deviation " + num(worst)};
}

PropertyResult check_complete_graph_entropy(std::uint64_t) {
    double worst = 0.0;
    for (int n = 3; n <= 12; ++n) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
        }
        const double s = von_neumann_entropy(Graph::from_edges(n, edges));
        worst = std::max(worst, std::abs(s - std::log(n - 1.0)));
    }
    return {"complete-graph-entropy", worst <= 1e-9,
            "max |S - ln(n-1)| = " + num(worst)};
}

PropertyResult check_entropy_bounds(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "entropy-bounds"));
    double lo = 1e300, excess = -1e300;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 18));
        const double s = von_neumann_entropy(random_density(rng, n));
        lo = std::min(lo, s);
        excess = std::max(excess, s - std::log(static_cast<double>(n)));
    }
    const Graph single = Graph::from_edges(5, {{1, 3, 2.5}});
    const double s_single = von_neumann_entropy(single);
    const bool ok = lo >= 0.0 && excess <= 1e-9 && std::abs(s_single) <= 1e-12;
    return {"entropy-bounds", ok,
            "min " + num(lo) + ", max excess over ln(n) " + num(excess) +
                ", single edge " + num(s_single)};
}

PropertyResult check_qjs_axioms(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "qjs-axioms"));
    double min_val = 1e300, worst_sym = 0.0, max_val = -1e300, max_self = 0.0;
    double min_distinct = 1e300;
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 13));
        const DensityMatrix a = random_density(rng, n);
        const DensityMatrix b = random_density(rng, n);
        const double ab = qjs_divergence(a, b);
        const double ba = qjs_divergence(b, a);
        min_val = std::min(min_val, ab);
        max_val = std::max(max_val, ab);
        worst_sym = std::max(worst_sym, std::abs(ab - ba));
        max_self = std::max(max_self, std::abs(qjs_divergence(a, a)));
        min_distinct = std::min(min_distinct, ab);
    }
    const DensityMatrix e01 =
        trace_normalize(Graph::from_edges(4, {{0, 1, 1.0}}).laplacian());
    const DensityMatrix e23 =
        trace_normalize(Graph::from_edges(4, {{2, 3, 1.0}}).laplacian());
    const double orth = qjs_divergence(e01, e23);
    const bool ok = min_val >= -1e-12 && max_val <= std::log(2.0) + 1e-12 &&
                    worst_sym <= 1e-10 && max_self <= 1e-12 &&
                    min_distinct > 1e-12 &&
                    std::abs(orth - std::log(2.0)) <= 1e-12;
    return {"qjs-axioms", ok,
            "range [" + num(min_val) + "," + num(max_val) + "], asymmetry " +
                num(worst_sym) + ", self " + num(max_self) +
                ", disjoint edges " + num(orth)};
}

PropertyResult check_qjs_triangle(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "qjs-triangle"));
    double worst = -1e300;
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 10));
        const DensityMatrix a = random_density(rng, n);
        const DensityMatrix b = random_density(rng, n);
        const DensityMatrix c = random_density(rng, n);
        const double dab = std::sqrt(std::max(0.0, qjs_divergence(a, b)));
        const double dbc = std::sqrt(std::max(0.0, qjs_divergence(b, c)));
        const double dac = std::sqrt(std::max(0.0, qjs_divergence(a, c)));
        worst = std::max(worst, dac - dab - dbc);
    }
    return {"qjs-sqrt-triangle", worst <= 1e-8, "max violation " + num(worst)};
}

PropertyResult check_objective_identity(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "objective-identity"));
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 10));
        const DensityMatrix sigma = random_density(rng, n);
        const DensityMatrix rho = random_density(rng, n);
        const double beta = 5.0 * rng.uniform01();
        const double s = von_neumann_entropy(sigma);
        const double s_rho = von_neumann_entropy(rho);
        const double d = qjs_divergence(sigma, rho);
        const double lhs = pri_objective(sigma, rho, beta) -
                           (s + beta * (2.0 * d)) ;
        worst = std::max(worst, std::abs(lhs - beta * s_rho));
    }
    return {"objective-divergence-identity", worst <= 1e-10,
            "max |residual| = " + num(worst)};
}

PropertyResult check_gradient_tangent(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "grad-tangent"));
    double worst_rel = 0.0, worst_radial = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Graph g = random_weighted_graph(derive_seed(seed, "grad", t), 10,
                                              0.4, true);
        const IncidenceMatrix inc(g);
        const DensityMatrix rho = trace_normalize(g.laplacian());
        const int m = g.edge_count();
        EdgeSelection w(m);
        for (int j = 0; j < m; ++j) w[j] = 0.1 + 0.8 * rng.uniform01();
        const double beta = 0.7;
        const Eigen::VectorXd grad = analytical_gradient(inc, rho, w, beta);

        Eigen::VectorXd v(m);
        for (int j = 0; j < m; ++j) v[j] = rng.normal();
        v.array() -= v.mean();  // simplex tangent
        v.normalize();
        const double h = 1e-6;
        auto value = [&](const EdgeSelection& ww) {
            const DensityMatrix s = trace_normalize(inc.subgraph_laplacian(ww));
            return pri_objective(s, rho, beta);
        };
        const double fd = (value(w + h * v) - value(w - h * v)) / (2.0 * h);
        const double an = grad.dot(v);
        worst_rel = std::max(worst_rel,
                             std::abs(fd - an) / std::max(1e-12, std::abs(fd)));
        worst_radial = std::max(worst_radial, std::abs(grad.dot(w) / w.norm()));
    }
    return {"gradient-tangent-fd",
            worst_rel <= 1e-4 && worst_radial <= 1e-8,
            "max rel err " + num(worst_rel) + ", max radial " + num(worst_radial)};
}

PropertyResult check_gradient_beta0(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "grad-beta0"));
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Graph g = random_weighted_graph(derive_seed(seed, "gb0", t), 10,
                                              0.4, true);
        const IncidenceMatrix inc(g);
        const int m = g.edge_count();
        EdgeSelection w(m);
        for (int j = 0; j < m; ++j) w[j] = 0.1 + 0.8 * rng.uniform01();
        const Eigen::VectorXd grad = analytical_gradient(inc, w, 0.0);
        // independent composition: S(sigma/t) = E(sigma)/t - 1 + ln t, so
        // grad_m = G3_m/t - E c_m/t^2 + c_m/t with G3 the unnormalized form
        const Eigen::MatrixXd sigma = inc.subgraph_laplacian(w);
        const double t_tr = sigma.trace();
        const double e_ext = extended_entropy(sigma);
        const Eigen::VectorXd g3 = entropy_gradient_unnormalized(inc, w);
        for (int j = 0; j < m; ++j) {
            const double c = 2.0 * inc.weight(j);
            const double oracle = g3[j] / t_tr - e_ext * c / (t_tr * t_tr) + c / t_tr;
            worst = std::max(worst, std::abs(grad[j] - oracle) /
                                        std::max(1.0, std::abs(oracle)));
        }
    }
    return {"gradient-beta0-reduction", worst <= 1e-8, "max rel dev " + num(worst)};
}

PropertyResult check_entropy_gradient_unnormalized(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "grad-ext"));
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
        const Graph g = random_weighted_graph(derive_seed(seed, "ge", t), 8, 0.5,
                                              true);
        const IncidenceMatrix inc(g);
        const int m = g.edge_count();
        EdgeSelection w(m);
        for (int j = 0; j < m; ++j) w[j] = 0.2 + 0.6 * rng.uniform01();
        const Eigen::VectorXd grad = entropy_gradient_unnormalized(inc, w);
        const double h = 1e-6;
        for (int j = 0; j < m; ++j) {
            EdgeSelection wp = w, wm = w;
            wp[j] += h;
            wm[j] -= h;
            const double fd = (extended_entropy(inc.subgraph_laplacian(wp)) -
                               extended_entropy(inc.subgraph_laplacian(wm))) /
                              (2.0 * h);
            worst = std::max(worst, std::abs(fd - grad[j]) /
                                        std::max(1e-6, std::abs(fd)));
        }
    }
    return {"extended-entropy-gradient-fd", worst <= 1e-4,
            "max rel err " + num(worst)};
}

PropertyResult check_gap_bound(std::uint64_t seed) {
    double worst_low = 0.0, worst_high = 0.0;
    for (int t = 0; t < 50; ++t) {
        const int n = 5 + (t % 30);
        const Graph g = random_weighted_graph(derive_seed(seed, "gap", t), n,
                                              0.35, false, true);
        const EntropyGapBound b = entropy_gap_bound(g);
        worst_low = std::min(worst_low, b.gap);
        worst_high = std::max(worst_high, b.gap - b.upper_bound);
    }
    return {"degree-entropy-gap-bound", worst_low >= -1e-12 && worst_high <= 1e-12,
            "min gap " + num(worst_low) + ", max gap-bound " + num(worst_high)};
}

PropertyResult check_foster_sum(std::uint64_t seed) {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_weighted_graph(derive_seed(seed, "foster", t),
                                              6 + t, 0.4);
        const Eigen::VectorXd r = effective_resistances(g);
        double total = 0.0;
        for (int m = 0; m < g.edge_count(); ++m) {
            total += g.edge(m).weight * r[m];
        }
        const double expected = g.node_count() - g.component_count();
        worst = std::max(worst, std::abs(total - expected));
    }
    return {"foster-sum", worst <= 1e-8, "max deviation " + num(worst)};
}

PropertyResult check_barrier_alpha0(std::uint64_t seed) {
    RandomStream rng(derive_seed(seed, "barrier"));
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Graph g = random_weighted_graph(derive_seed(seed, "bar", t), 10,
                                              0.5, true);
        const IncidenceMatrix inc(g);
        const DensityMatrix rho = trace_normalize(g.laplacian());
        EdgeSelection w(g.edge_count());
        for (int j = 0; j < w.size(); ++j) w[j] = 0.05 + 0.9 * rng.uniform01();
        PriConfig cfg;
        cfg.alpha = 0.0;
        cfg.beta = 1.3;
        const double with_barrier = objective_with_barrier(inc, rho, w, cfg);
        const double direct = pri_objective(
            trace_normalize(inc.subgraph_laplacian(w)), rho, cfg.beta);
        worst = std::max(worst, std::abs(with_barrier - direct));
    }
    return {"barrier-alpha-zero", worst <= 1e-12, "max deviation " + num(worst)};
}

PropertyResult check_gumbel_limits(std::uint64_t seed) {
    Eigen::MatrixXd theta(4, 2);
    theta << 0.3, -0.2, 1.0, 1.0, -2.0, 2.0, 0.0, 0.0;
    RandomStream hot(derive_seed(seed, "gumbel-hot"));
    const GumbelDraw soft_hot = gumbel_softmax_draw(theta, 1e9, false, hot);
    double worst_half = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst_half = std::max(worst_half, std::abs(soft_hot.w[i] - 0.5));
    }
    RandomStream cold(derive_seed(seed, "gumbel-cold"));
    const GumbelDraw soft_cold = gumbel_softmax_draw(theta, 1e-3, false, cold);
    double worst_onehot = 0.0;  // distance of each cold entry from {0,1}
    for (int i = 0; i < 4; ++i) {
        worst_onehot = std::max(
            worst_onehot, std::min(soft_cold.w[i], 1.0 - soft_cold.w[i]));
    }
    RandomStream hard_rng(derive_seed(seed, "gumbel-hard"));
    const GumbelDraw hard = gumbel_softmax_draw(theta, 1.0, true, hard_rng);
    bool hard_ok = true;
    for (int i = 0; i < 4; ++i) {
        if (hard.w[i] != 0.0 && hard.w[i] != 1.0) hard_ok = false;
    }
    const bool ok = worst_half <= 1e-6 && worst_onehot <= 1e-9 && hard_ok;
    return {"gumbel-softmax-limits", ok,
            "hot dev from 1/2: " + num(worst_half) + ", cold dev from one-hot: " +
                num(worst_onehot)};
}

PropertyResult check_sparsify_determinism(std::uint64_t seed) {
    const Graph g = gen_er(24, 0.3, derive_seed(seed, "det-graph"));
    PriConfig cfg;
    cfg.max_iterations = 40;
    cfg.samples = 2;
    cfg.seed = derive_seed(seed, "det-run");
    const SparsifyReport a = sparsify_pri(g, cfg);
    const SparsifyReport b = sparsify_pri(g, cfg);
    const bool same = a.selection.cwiseEqual(b.selection).all() &&
                      a.soft_selection.cwiseEqual(b.soft_selection).all() &&
                      a.objective_trace == b.objective_trace &&
                      a.retained_edge_count == b.retained_edge_count;
    return {"sparsify-determinism", same,
            same ? "identical reruns" : "rerun mismatch"};
}

PropertyResult check_ratio_counts(std::uint64_t seed) {
    const Graph g = gen_er(30, 0.4, derive_seed(seed, "count-graph"));
    const int m = g.edge_count();
    bool ok = true;
    std::string detail;
    for (double ratio : {0.1, 0.33, 0.5, 1.0}) {
        const int expect =
            static_cast<int>(std::ceil(ratio * static_cast<double>(m) - 1e-12));
        const int r1 = static_cast<int>(
            random_sparsifier(g, ratio, derive_seed(seed, "c1")).sum());
        const int r2 =
            static_cast<int>(local_similarity_sparsifier(g, ratio).sum());
        const int r3 = static_cast<int>(
            effective_resistance_sparsifier(g, ratio, derive_seed(seed, "c3"))
                .sum());
        if (r1 != expect || r2 != expect || r3 != expect) {
            ok = false;
            detail = "ratio " + num(ratio) + " kept " + std::to_string(r1) + "/" +
                     std::to_string(r2) + "/" + std::to_string(r3) + " expected " +
                     std::to_string(expect);
        }
    }
    if (ok) detail = "ceil(ratio*M) respected";
    return {"sparsifier-ratio-counts", ok, detail};
}

PropertyResult check_spectral_distance_basics(std::uint64_t seed) {
    const Graph g = random_weighted_graph(derive_seed(seed, "sd"), 12, 0.5, true);
    const Eigen::MatrixXd lap = g.laplacian();
    const Eigen::VectorXd x = fiedler_vector(lap);
    const double self = spectral_distance(lap, lap, x);
    const double doubled = spectral_distance(lap, 2.0 * lap, x);
    const bool ok = std::abs(self) <= 1e-12 && doubled > 0.0;
    return {"spectral-distance-basics", ok,
            "self " + num(self) + ", doubled " + num(doubled)};
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
    const Check checks[] = {
        check_subgraph_laplacian_oracle,
        check_incidence_factorization,
        check_selection_linearity,
        check_complete_graph_entropy,
        check_entropy_bounds,
        check_qjs_axioms,
        check_qjs_triangle,
        check_objective_identity,
        check_gradient_tangent,
        check_gradient_beta0,
        check_entropy_gradient_unnormalized,
        check_gap_bound,
        check_foster_sum,
        check_barrier_alpha0,
        check_gumbel_limits,
        check_sparsify_determinism,
        check_ratio_counts,
        check_spectral_distance_basics,
    };
    std::vector<PropertyResult> results;
    for (const Check& c : checks) results.push_back(c(seed));
    return results;
}

}  // namespace graphpri
