#include "graphpri/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "graphpri/baselines.hpp"
#include "graphpri/density.hpp"
#include "graphpri/entropy.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/linalg.hpp"
#include "graphpri/rng.hpp"
#include "graphpri/version.hpp"

namespace graphpri {

Eigen::VectorXd fiedler_vector(const Eigen::MatrixXd& laplacian) {
    if (laplacian.rows() < 2) {
        throw std::invalid_argument("need at least two nodes");
    }
    const EigSym eig = eig_sym(laplacian);
    if (eig.values[1] <= 1e-10) {
        throw disconnected_graph_error(
            "second Laplacian eigenvalue is " + std::to_string(eig.values[1]) +
            "; graph is disconnected");
    }
    Eigen::VectorXd x = eig.vectors.col(1);
    for (int i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > 1e-12) {
            if (x[i] < 0.0) x = -x;
            break;
        }
    }
    return x;
}

double spectral_distance(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma,
                         const Eigen::VectorXd& x) {
    if (rho.rows() != sigma.rows() || rho.rows() != x.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    const double qr = x.dot(rho * x);
    const double qs = x.dot(sigma * x);
    if (qr <= 1e-12 || qs <= 1e-12) {
        return std::numeric_limits<double>::infinity();
    }
    const double num = ((rho - sigma) * x).squaredNorm() * x.squaredNorm();
    return std::acosh(1.0 + num / (2.0 * qr * qs));
}

double centralization(const Graph& g) {
    const int n = g.node_count();
    if (n < 3) {
        throw std::invalid_argument("centralization needs at least 3 nodes");
    }
    const Eigen::VectorXi d = g.unweighted_degrees();
    const int dmax = d.maxCoeff();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += dmax - d[i];
    return sum / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

const std::vector<std::string>& metric_registry() {
    static const std::vector<std::string> names = {
        "entropy",
        "divergence",
        "retained_edges",
        "spectral_distance",
        "centralization",
        "percent_entropy_increase",
        "fraction_divergence_decrease",
        "disconnected_fraction",
    };
    return names;
}

namespace {

MetricStat stat_of(const std::vector<double>& xs) {
    MetricStat s;
    s.count = static_cast<int>(xs.size());
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() >= 2) {
        double sq = 0.0;
        for (double x : xs) sq += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
    }
    return s;
}

void check_ratios(const std::vector<double>& ratios) {
    for (double r : ratios) {
        if (!(r > 0.0 && r <= 1.0)) {
            throw std::invalid_argument("ratios must lie in (0,1], got " +
                                        std::to_string(r));
        }
    }
}

double entropy_of_values(const Eigen::VectorXd& vals) {
    double s = 0.0;
    for (int i = 0; i < vals.size(); ++i) {
        if (vals[i] > kEntropyEigCutoff) s -= vals[i] * std::log(vals[i]);
    }
    return s;
}

}  // namespace

std::vector<CurvePoint> tradeoff_curve(const Graph& g,
                                       const std::vector<double>& ratios,
                                       int replicates, std::uint64_t seed) {
    check_ratios(ratios);
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    const DensityMatrix rho = trace_normalize(g.laplacian());
    const double s_rho = von_neumann_entropy(rho);
    std::vector<CurvePoint> out;
    for (size_t i = 0; i < ratios.size(); ++i) {
        std::vector<double> entropies, divergences, retained;
        for (int r = 0; r < replicates; ++r) {
            const EdgeSelection mask = random_sparsifier(
                g, ratios[i],
                derive_seed(seed, "tradeoff",
                            static_cast<std::uint64_t>(i) * 1000000 +
                                static_cast<std::uint64_t>(r)));
            const DensityMatrix sigma =
                trace_normalize(g.induced_by(mask).laplacian());
            const double s_sigma = von_neumann_entropy(sigma);
            const Eigen::MatrixXd mix = 0.5 * (sigma.values() + rho.values());
            const double s_mix = entropy_of_values(eig_sym_values(mix));
            entropies.push_back(s_sigma);
            divergences.push_back(s_mix - 0.5 * s_sigma - 0.5 * s_rho);
            retained.push_back(mask.sum());
        }
        CurvePoint p;
        p.x = ratios[i];
        p.metrics["entropy"] = stat_of(entropies);
        p.metrics["divergence"] = stat_of(divergences);
        p.metrics["retained_edges"] = stat_of(retained);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<CurvePoint> beta_sparsity_curve(const Graph& g,
                                            const std::vector<double>& beta_grid,
                                            int replicates, const PriConfig& cfg) {
    if (!std::is_sorted(beta_grid.begin(), beta_grid.end())) {
        throw std::invalid_argument("beta grid must be ascending");
    }
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    std::vector<CurvePoint> out;
    for (size_t i = 0; i < beta_grid.size(); ++i) {
        std::vector<double> retained;
        for (int r = 0; r < replicates; ++r) {
            PriConfig run = cfg;
            run.beta = beta_grid[i];
            run.seed = derive_seed(cfg.seed, "beta-curve",
                                   static_cast<std::uint64_t>(i) * 1000000 +
                                       static_cast<std::uint64_t>(r));
            retained.push_back(
                static_cast<double>(sparsify_pri(g, run).retained_edge_count));
        }
        CurvePoint p;
        p.x = beta_grid[i];
        p.metrics["retained_edges"] = stat_of(retained);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<AssumptionRow> assumption_check(
    int n, const std::vector<double>& target_mean_degrees, int replicates,
    std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    std::vector<AssumptionRow> rows;
    for (size_t di = 0; di < target_mean_degrees.size(); ++di) {
        const double dbar = target_mean_degrees[di];
        const double p = dbar / static_cast<double>(n - 1);
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("target degree " + std::to_string(dbar) +
                                        " is infeasible for n=" + std::to_string(n));
        }
        AssumptionRow row;
        row.target_degree = dbar;
        std::vector<double> percentages;
        for (int r = 0; r < replicates; ++r) {
            const Graph g =
                gen_er(n, p,
                       derive_seed(seed, "assumption",
                                   static_cast<std::uint64_t>(di) * 1000000 +
                                       static_cast<std::uint64_t>(r)));
            if (g.edge_count() == 0) continue;  // entropy undefined
            Eigen::MatrixXd lap = g.laplacian();
            const double s0 = entropy_of_values(eig_sym_values(lap / lap.trace()));
            const Eigen::MatrixXd adj = g.adjacency();
            long long nonneg = 0, pairs = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (adj(u, v) != 0.0) continue;
                    Eigen::MatrixXd lap2 = lap;
                    lap2(u, u) += 1.0;
                    lap2(v, v) += 1.0;
                    lap2(u, v) -= 1.0;
                    lap2(v, u) -= 1.0;
                    const double s1 =
                        entropy_of_values(eig_sym_values(lap2 / lap2.trace()));
                    ++pairs;
                    if (s1 - s0 >= -1e-12) ++nonneg;
                }
            }
            if (pairs == 0) continue;  // complete graph
            percentages.push_back(100.0 * static_cast<double>(nonneg) /
                                  static_cast<double>(pairs));
            row.pairs_checked += pairs;
        }
        const MetricStat stat = stat_of(percentages);
        row.graphs_used = stat.count;
        row.percent_nonnegative = stat.mean;
        row.percent_stddev = stat.stddev;
        rows.push_back(row);
    }
    return rows;
}

double corollary_check(const Graph& g, double sparsify_ratio, int trials,
                       std::uint64_t seed) {
    if (!g.is_connected()) {
        throw disconnected_graph_error("corollary check needs a connected graph");
    }
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const DensityMatrix rho = trace_normalize(g.laplacian());
    const double s_rho = von_neumann_entropy(rho);
    EdgeSelection mask =
        random_sparsifier(g, sparsify_ratio, derive_seed(seed, "corollary-mask"));
    std::vector<int> removed;
    for (int m = 0; m < g.edge_count(); ++m) {
        if (mask[m] == 0.0) removed.push_back(m);
    }
    if (removed.empty()) return 1.0;

    const IncidenceMatrix inc(g);
    auto divergence = [&](const EdgeSelection& w) {
        const DensityMatrix sigma = trace_normalize(inc.subgraph_laplacian(w));
        const double s_sigma = von_neumann_entropy(sigma);
        const Eigen::MatrixXd mix = 0.5 * (sigma.values() + rho.values());
        return entropy_of_values(eig_sym_values(mix)) - 0.5 * s_sigma -
               0.5 * s_rho;
    };
    const double base = divergence(mask);
    RandomStream rng(derive_seed(seed, "corollary-trials"));
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        const int pick = removed[static_cast<size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(removed.size()) - 1))];
        EdgeSelection w = mask;
        w[pick] = 1.0;
        if (divergence(w) <= base) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

namespace {

// smallest exponent whose kept count lands closest to the target
EdgeSelection local_degree_at_ratio(const Graph& g, double ratio) {
    const int target = static_cast<int>(
        std::ceil(ratio * static_cast<double>(g.edge_count()) - 1e-12));
    double lo = 0.0, hi = 1.0;
    EdgeSelection best = local_degree_sparsifier(g, 1.0);
    int best_err = std::abs(static_cast<int>(best.sum()) - target);
    double best_exp = 1.0;
    for (int it = 0; it < 40 && best_err != 0; ++it) {
        const double mid = 0.5 * (lo + hi);
        const EdgeSelection w = local_degree_sparsifier(g, mid);
        const int kept = static_cast<int>(w.sum());
        const int err = std::abs(kept - target);
        if (err < best_err || (err == best_err && mid < best_exp)) {
            best = w;
            best_err = err;
            best_exp = mid;
        }
        if (kept >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return best;
}

}  // namespace

std::vector<CurvePoint> sparsifier_comparison(const Graph& g,
                                              const std::vector<std::string>& methods,
                                              const std::vector<double>& ratios,
                                              int replicates, std::uint64_t seed,
                                              const PriConfig& cfg) {
    static const std::set<std::string> known = {
        "pri", "random", "local_degree", "local_similarity",
        "effective_resistance"};
    for (const auto& m : methods) {
        if (known.find(m) == known.end()) {
            throw std::invalid_argument("unknown method '" + m + "'");
        }
    }
    check_ratios(ratios);
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");

    const Eigen::MatrixXd lap = g.laplacian();
    const Eigen::VectorXd x = fiedler_vector(lap);
    const int m_edges = g.edge_count();

    // PRI trains once per replicate; each ratio slices its keep-probabilities.
    std::vector<EdgeSelection> pri_soft;
    if (std::find(methods.begin(), methods.end(), "pri") != methods.end()) {
        for (int r = 0; r < replicates; ++r) {
            PriConfig run = cfg;
            run.seed = derive_seed(seed, "cmp-pri", static_cast<std::uint64_t>(r));
            pri_soft.push_back(sparsify_pri(g, run).soft_selection);
        }
    }

    std::vector<CurvePoint> out;
    for (size_t i = 0; i < ratios.size(); ++i) {
        const double ratio = ratios[i];
        const int k = static_cast<int>(
            std::ceil(ratio * static_cast<double>(m_edges) - 1e-12));
        for (const auto& method : methods) {
            std::vector<EdgeSelection> masks;
            if (method == "pri") {
                for (int r = 0; r < replicates; ++r) {
                    masks.push_back(harden_top_k(pri_soft[static_cast<size_t>(r)], k));
                }
            } else if (method == "random") {
                for (int r = 0; r < replicates; ++r) {
                    masks.push_back(random_sparsifier(
                        g, ratio,
                        derive_seed(seed, "cmp-random",
                                    static_cast<std::uint64_t>(i) * 1000000 +
                                        static_cast<std::uint64_t>(r))));
                }
            } else if (method == "effective_resistance") {
                for (int r = 0; r < replicates; ++r) {
                    masks.push_back(effective_resistance_sparsifier(
                        g, ratio,
                        derive_seed(seed, "cmp-er",
                                    static_cast<std::uint64_t>(i) * 1000000 +
                                        static_cast<std::uint64_t>(r))));
                }
            } else if (method == "local_degree") {
                masks.push_back(local_degree_at_ratio(g, ratio));
            } else {  // local_similarity
                masks.push_back(local_similarity_sparsifier(g, ratio));
            }

            std::vector<double> finite_dist, centr, retained;
            int infinite = 0;
            for (const auto& mask : masks) {
                const Graph sub = g.induced_by(mask);
                const double d = spectral_distance(lap, sub.laplacian(), x);
                if (std::isfinite(d)) {
                    finite_dist.push_back(d);
                } else {
                    ++infinite;
                }
                centr.push_back(centralization(sub));
                retained.push_back(mask.sum());
            }
            CurvePoint p;
            p.x = ratio;
            p.method = method;
            MetricStat dist_stat = stat_of(finite_dist);
            if (finite_dist.empty()) {
                dist_stat.mean = std::numeric_limits<double>::infinity();
            }
            p.metrics["spectral_distance"] = dist_stat;
            p.metrics["centralization"] = stat_of(centr);
            p.metrics["retained_edges"] = stat_of(retained);
            MetricStat frac;
            frac.mean = static_cast<double>(infinite) /
                        static_cast<double>(masks.size());
            frac.count = static_cast<int>(masks.size());
            p.metrics["disconnected_fraction"] = frac;
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::json json_number(double x) {
    if (std::isfinite(x)) return x;
    return x > 0 ? "inf" : "-inf";
}

std::string metric_label(const CurvePoint& p, const std::string& name) {
    return p.method.empty() ? name : p.method + ":" + name;
}

}  // namespace

std::string curve_csv(const std::vector<CurvePoint>& points,
                      const std::string& suite, std::uint64_t seed,
                      const std::string& config_summary) {
    std::string out;
    out += "# suite=" + suite + " seed=" + std::to_string(seed) +
           " commit=" + std::string(kCommit) + "\n";
    out += "# config=" + config_summary + "\n";
    out += "x,metric,mean,std,n,seed\n";
    for (const auto& p : points) {
        for (const auto& [name, stat] : p.metrics) {
            out += fmt_double(p.x) + "," + metric_label(p, name) + "," +
                   fmt_double(stat.mean) + "," + fmt_double(stat.stddev) + "," +
                   std::to_string(stat.count) + "," + std::to_string(seed) + "\n";
        }
    }
    return out;
}

std::string curve_json(const std::vector<CurvePoint>& points,
                       const std::string& suite, std::uint64_t seed,
                       const std::string& config_summary) {
    nlohmann::json doc;
    doc["provenance"] = {{"suite", suite},
                         {"seed", seed},
                         {"config", config_summary},
                         {"commit", kCommit}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : points) {
        for (const auto& [name, stat] : p.metrics) {
            rows.push_back({{"x", json_number(p.x)},
                            {"metric", metric_label(p, name)},
                            {"mean", json_number(stat.mean)},
                            {"std", json_number(stat.stddev)},
                            {"n", stat.count},
                            {"seed", seed}});
        }
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace graphpri
