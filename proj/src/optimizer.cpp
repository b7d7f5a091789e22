#include "graphpri/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphpri/entropy.hpp"
#include "graphpri/linalg.hpp"

namespace graphpri {

void validate(const PriConfig& cfg) {
    if (!(cfg.beta >= 0.0)) {
        throw std::invalid_argument("beta must be >= 0, got " +
                                    std::to_string(cfg.beta));
    }
    if (!(cfg.alpha >= 0.0)) {
        throw std::invalid_argument("alpha must be >= 0, got " +
                                    std::to_string(cfg.alpha));
    }
    if (!(cfg.temperature > 0.0)) {
        throw std::invalid_argument("temperature must be > 0, got " +
                                    std::to_string(cfg.temperature));
    }
    if (!(cfg.step_size > 0.0)) {
        throw std::invalid_argument("step_size must be > 0, got " +
                                    std::to_string(cfg.step_size));
    }
    if (cfg.samples < 1) {
        throw std::invalid_argument("samples must be >= 1, got " +
                                    std::to_string(cfg.samples));
    }
    if (cfg.max_iterations < 0) {
        throw std::invalid_argument("max_iterations must be >= 0, got " +
                                    std::to_string(cfg.max_iterations));
    }
}

GumbelDraw gumbel_softmax_draw(const Eigen::MatrixXd& theta, double temperature,
                               bool hard, RandomStream& rng) {
    if (theta.cols() != 2) {
        throw std::invalid_argument("theta must have two columns, got " +
                                    std::to_string(theta.cols()));
    }
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("temperature must be > 0");
    }
    const int m = static_cast<int>(theta.rows());
    GumbelDraw out;
    out.w.resize(m);
    out.soft.resize(m);
    for (int i = 0; i < m; ++i) {
        const double a0 = (theta(i, 0) + rng.gumbel()) / temperature;
        const double a1 = (theta(i, 1) + rng.gumbel()) / temperature;
        // two-class softmax, stable
        const double hi = std::max(a0, a1);
        const double e0 = std::exp(a0 - hi);
        const double e1 = std::exp(a1 - hi);
        const double p1 = e1 / (e0 + e1);
        out.soft[i] = p1;
        out.w[i] = hard ? (a1 > a0 ? 1.0 : 0.0) : p1;
    }
    return out;
}

EdgeSelection gumbel_softmax(const Eigen::MatrixXd& theta, double temperature,
                             bool hard, RandomStream& rng) {
    return gumbel_softmax_draw(theta, temperature, hard, rng).w;
}

namespace {

// Smoothing inside the entropy-gradient log. A hard eigenvalue cutoff would
// zero the gradient on null-space directions, hiding the first-order entropy
// cost/benefit of edges that expand the support; the eps keeps a large finite
// factor there instead, which is what makes binary samples trainable.
constexpr double kGradLogEps = 1e-20;

// d(-x ln(x+eps))/dx, evaluated on the nonnegative part. Matches -(ln x + 1)
// away from zero and stays finite (about 46) at x = 0.
double entropy_grad_factor(double x) {
    const double xp = std::max(x, 0.0);
    return -(std::log(xp + kGradLogEps) + xp / (xp + kGradLogEps));
}

double barrier_value(const Eigen::VectorXd& deg, double alpha) {
    if (alpha == 0.0) return 0.0;
    double v = 0.0;
    for (int i = 0; i < deg.size(); ++i) {
        v -= std::log(std::max(deg[i], kBarrierDegreeFloor));
    }
    return alpha * v;
}

// Slope floor for the barrier gradient. Binary samples jump straight over the
// cliff at degree zero, so the slope an edge sees when it is load-bearing
// (its endpoint would be isolated without it) stands in for the whole
// expected cliff; the floor bounds it at -alpha/floor. Edges whose endpoints
// stay connected without them feel only the smooth -alpha/deg part, keeping
// redundant edges answerable to entropy-scale gradients.
constexpr double kBarrierGradientFloor = 5e-3;

// d(barrier)/d(deg_i) for one incident edge, evaluated at the degree the
// endpoint would have without that edge.
double barrier_degree_grad(double deg_without_edge, double alpha) {
    return -alpha / std::max(deg_without_edge, kBarrierGradientFloor);
}

struct ObjectiveGrad {
    double value = 0.0;
    Eigen::VectorXd dw;  // empty when gradient not requested
    bool empty = false;  // selection trace was zero
};

// Exact objective (and optionally its w-gradient) via two eigendecompositions.
// Barrier excluded; callers add it at the granularity they need.
ObjectiveGrad exact_objective(const IncidenceMatrix& inc,
                              const DensityMatrix& rho, const EdgeSelection& w,
                              const PriConfig& cfg, bool want_grad) {
    ObjectiveGrad out;
    const int m = inc.edge_count();
    const Eigen::MatrixXd sigma = inc.subgraph_laplacian(w);
    const double t = sigma.trace();
    if (!(t > 0.0)) {
        out.empty = true;
        return out;
    }
    const Eigen::MatrixXd sigma_n = sigma / t;
    const Eigen::MatrixXd mix = 0.5 * (sigma_n + rho.values());
    const double beta = cfg.beta;

    const EigSym e1 = eig_sym(sigma_n);
    const EigSym e2 = eig_sym(mix);
    double s1 = 0.0, s2 = 0.0;
    Eigen::VectorXd f1(e1.values.size());
    Eigen::VectorXd f2(e2.values.size());
    for (int i = 0; i < e1.values.size(); ++i) {
        const double x = e1.values[i];
        if (x > kEntropyEigCutoff) s1 -= x * std::log(x);
        f1[i] = entropy_grad_factor(x);
        const double y = e2.values[i];
        if (y > kEntropyEigCutoff) s2 -= y * std::log(y);
        f2[i] = entropy_grad_factor(y);
    }
    out.value = (1.0 - beta) * s1 + 2.0 * beta * s2;
    if (!want_grad) return out;

    // dS1/dw_m = (b_m^T F1 b_m - c_m tr(F1 sigma_n)) / t, F1 = dS/dsigma_n;
    // mixture term picks up a 1/2 from d(mix)/d(sigma_n).
    const Eigen::MatrixXd F1 =
        e1.vectors * f1.asDiagonal() * e1.vectors.transpose();
    const Eigen::MatrixXd F2 =
        e2.vectors * f2.asDiagonal() * e2.vectors.transpose();
    const double tr1 = f1.dot(e1.values);
    const double tr2 = F2.cwiseProduct(sigma_n).sum();
    out.dw.resize(m);
    for (int j = 0; j < m; ++j) {
        const double c = 2.0 * inc.weight(j);
        const double q1 = inc.quad_form(F1, j);
        const double q2 = inc.quad_form(F2, j);
        out.dw[j] = ((1.0 - beta) * (q1 - c * tr1) + beta * (q2 - c * tr2)) / t;
    }
    return out;
}

// O(N)-per-evaluation surrogate: Shannon entropy of selection degrees, and of
// the diagonal mixture with the reference state's diagonal. Barrier excluded
// here as well.
ObjectiveGrad approx_objective(const IncidenceMatrix& inc,
                               const Eigen::VectorXd& rho_diag,
                               const EdgeSelection& w, const PriConfig& cfg,
                               bool want_grad) {
    ObjectiveGrad out;
    const int n = inc.node_count();
    const int m = inc.edge_count();
    const Eigen::VectorXd deg = inc.selection_degrees(w);
    const double total = deg.sum();
    if (!(total > 0.0)) {
        out.empty = true;
        return out;
    }
    const double beta = cfg.beta;
    Eigen::VectorXd p(n), pbar(n);
    double h1 = 0.0, h2 = 0.0;
    for (int i = 0; i < n; ++i) {
        p[i] = deg[i] / total;
        pbar[i] = 0.5 * (p[i] + rho_diag[i]);
        if (p[i] > kEntropyEigCutoff) h1 -= p[i] * std::log(p[i]);
        if (pbar[i] > kEntropyEigCutoff) h2 -= pbar[i] * std::log(pbar[i]);
    }
    out.value = (1.0 - beta) * h1 + 2.0 * beta * h2;
    if (!want_grad) return out;

    Eigen::VectorXd phi(n), psi(n);
    double phi_mean = 0.0, psi_mean = 0.0;  // expectations under p
    for (int i = 0; i < n; ++i) {
        phi[i] = entropy_grad_factor(p[i]);
        psi[i] = entropy_grad_factor(pbar[i]);
        phi_mean += phi[i] * p[i];
        psi_mean += psi[i] * p[i];
    }
    Eigen::VectorXd h(n);  // dJ/d(deg_i)
    for (int i = 0; i < n; ++i) {
        const double d1 = (phi[i] - phi_mean) / total;
        const double d2 = (psi[i] - psi_mean) / (2.0 * total);
        h[i] = (1.0 - beta) * d1 + 2.0 * beta * d2;
    }
    out.dw.resize(m);
    for (int j = 0; j < m; ++j) {
        out.dw[j] = inc.weight(j) * (h[inc.head(j)] + h[inc.tail(j)]);
    }
    return out;
}

ObjectiveGrad objective_and_grad(const IncidenceMatrix& inc,
                                 const DensityMatrix& rho,
                                 const Eigen::VectorXd& rho_diag,
                                 const EdgeSelection& w, const PriConfig& cfg,
                                 bool want_grad) {
    return cfg.use_degree_entropy_approx
               ? approx_objective(inc, rho_diag, w, cfg, want_grad)
               : exact_objective(inc, rho, w, cfg, want_grad);
}

std::string theta_diagnostic(const Eigen::MatrixXd& theta, int iteration) {
    std::ostringstream os;
    os << "iteration " << iteration << ", theta in ["
       << theta.minCoeff() << ", " << theta.maxCoeff() << "]";
    return os.str();
}

}  // namespace

double objective_with_barrier(const IncidenceMatrix& inc,
                              const DensityMatrix& rho, const EdgeSelection& w,
                              const PriConfig& cfg) {
    validate(cfg);
    if (w.size() != inc.edge_count()) {
        throw std::invalid_argument("selection size mismatch");
    }
    for (int i = 0; i < w.size(); ++i) {
        if (!(w[i] >= 0.0 && w[i] <= 1.0)) {
            throw std::invalid_argument("selection entry " + std::to_string(i) +
                                        " outside [0,1]");
        }
    }
    const Eigen::VectorXd rho_diag = rho.values().diagonal();
    ObjectiveGrad r = objective_and_grad(inc, rho, rho_diag, w, cfg, false);
    if (r.empty) {
        throw empty_graph_error("selection keeps no edges (zero trace)");
    }
    return r.value + barrier_value(inc.selection_degrees(w), cfg.alpha);
}

Eigen::VectorXd analytical_gradient(const IncidenceMatrix& inc,
                                    const EdgeSelection& w, double beta) {
    const EdgeSelection ones = EdgeSelection::Ones(inc.edge_count());
    return analytical_gradient(inc, trace_normalize(inc.subgraph_laplacian(ones)),
                               w, beta);
}

Eigen::VectorXd analytical_gradient(const IncidenceMatrix& inc,
                                    const DensityMatrix& rho,
                                    const EdgeSelection& w, double beta) {
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("beta must be >= 0");
    }
    if (w.size() != inc.edge_count()) {
        throw std::invalid_argument("selection size mismatch");
    }
    for (int i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0.0 && w[i] < 1.0)) {
            throw std::invalid_argument(
                "analytical_gradient needs strictly interior selections; entry " +
                std::to_string(i) + " = " + std::to_string(w[i]));
        }
    }
    const Eigen::MatrixXd sigma = inc.subgraph_laplacian(w);
    const double t = sigma.trace();
    if (!(t > 0.0)) throw empty_graph_error("zero-trace selection");
    const Eigen::MatrixXd sigma_n = sigma / t;
    const Eigen::MatrixXd mix = 0.5 * (sigma_n + rho.values());
    const Eigen::MatrixXd log_s = psd_log(sigma_n, kEntropyEigCutoff);
    const Eigen::MatrixXd log_m = psd_log(mix, kEntropyEigCutoff);

    const int m = inc.edge_count();
    Eigen::VectorXd g(m), c(m);
    for (int j = 0; j < m; ++j) {
        g[j] = -(1.0 - beta) * inc.quad_form(log_s, j) -
               beta * inc.quad_form(log_m, j);
        c[j] = 2.0 * inc.weight(j);
    }
    // Projecting out the trace direction turns the per-edge forms into the
    // gradient of the trace-normalized objective; w^T grad = 0 by design.
    const double k = w.dot(g) / t;
    return (g - k * c) / t;
}

Eigen::VectorXd entropy_gradient_unnormalized(const IncidenceMatrix& inc,
                                              const EdgeSelection& w) {
    if (w.size() != inc.edge_count()) {
        throw std::invalid_argument("selection size mismatch");
    }
    const Eigen::MatrixXd sigma = inc.subgraph_laplacian(w);
    const Eigen::MatrixXd log_s = psd_log(sigma, kEntropyEigCutoff);
    Eigen::VectorXd g(inc.edge_count());
    for (int j = 0; j < inc.edge_count(); ++j) {
        g[j] = -inc.quad_form(log_s, j);
    }
    return g;
}

SparsifyReport sparsify_pri(const Graph& g, const PriConfig& cfg) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    if (g.edge_count() == 0) {
        throw empty_graph_error("cannot sparsify a graph with no edges");
    }
    const IncidenceMatrix inc(g);
    const DensityMatrix rho = trace_normalize(g.laplacian());
    const Eigen::VectorXd rho_diag = rho.values().diagonal();
    const int m = g.edge_count();

    RandomStream rng(derive_seed(cfg.seed, "pri-optimizer"));
    OptimizerState state;
    state.theta.resize(m, 2);
    for (int i = 0; i < m; ++i) {
        state.theta(i, 0) = rng.normal();
        state.theta(i, 1) = rng.normal();
    }
    state.adam_m = Eigen::MatrixXd::Zero(m, 2);
    state.adam_v = Eigen::MatrixXd::Zero(m, 2);

    constexpr double kB1 = 0.9, kB2 = 0.999, kAdamEps = 1e-8;
    constexpr int kMaxRedraws = 100;

    SparsifyReport report;
    report.objective_trace.reserve(static_cast<size_t>(cfg.max_iterations));

    for (int it = 0; it < cfg.max_iterations; ++it) {
        Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(m, 2);
        double obj_sum = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            GumbelDraw draw;
            ObjectiveGrad og;
            int redraws = 0;
            for (;;) {
                draw = gumbel_softmax_draw(state.theta, cfg.temperature,
                                           cfg.hard_sampling, rng);
                og = objective_and_grad(inc, rho, rho_diag, draw.w, cfg, true);
                if (!og.empty) break;
                if (++redraws > kMaxRedraws) {
                    throw optimizer_diverged_error(
                        "every sampled selection was empty; " +
                        theta_diagnostic(state.theta, it));
                }
            }
            const Eigen::VectorXd drawn_deg = inc.selection_degrees(draw.w);
            obj_sum += og.value + barrier_value(drawn_deg, cfg.alpha);
            // straight-through: d w / d theta uses the relaxed probabilities
            for (int j = 0; j < m; ++j) {
                const double p1 = draw.soft[j];
                const double dw_dtheta1 = p1 * (1.0 - p1) / cfg.temperature;
                const double own = inc.weight(j) * draw.w[j];
                const double dj =
                    og.dw[j] +
                    inc.weight(j) *
                        (barrier_degree_grad(drawn_deg[inc.head(j)] - own,
                                             cfg.alpha) +
                         barrier_degree_grad(drawn_deg[inc.tail(j)] - own,
                                             cfg.alpha));
                grad(j, 1) += dj * dw_dtheta1;
                grad(j, 0) -= dj * dw_dtheta1;
            }
        }
        grad /= static_cast<double>(cfg.samples);
        const double mean_obj = obj_sum / cfg.samples;
        report.objective_trace.push_back(mean_obj);
        if (!std::isfinite(mean_obj) || !grad.allFinite()) {
            throw optimizer_diverged_error("non-finite objective or gradient; " +
                                           theta_diagnostic(state.theta, it));
        }

        state.iteration = it + 1;
        const double bc1 = 1.0 - std::pow(kB1, state.iteration);
        const double bc2 = 1.0 - std::pow(kB2, state.iteration);
        state.adam_m = kB1 * state.adam_m + (1.0 - kB1) * grad;
        state.adam_v = kB2 * state.adam_v + (1.0 - kB2) * grad.cwiseProduct(grad);
        state.theta -=
            (cfg.step_size * (state.adam_m / bc1).array() /
             ((state.adam_v / bc2).array().sqrt() + kAdamEps))
                .matrix();
        if (!state.theta.allFinite()) {
            throw optimizer_diverged_error("non-finite logits; " +
                                           theta_diagnostic(state.theta, it));
        }
    }

    // final mask: one fresh draw from the trained logits
    report.selection =
        gumbel_softmax_draw(state.theta, cfg.temperature, cfg.hard_sampling, rng)
            .w;
    report.soft_selection.resize(m);
    for (int j = 0; j < m; ++j) {
        const double hi = std::max(state.theta(j, 0), state.theta(j, 1));
        const double e0 = std::exp(state.theta(j, 0) - hi);
        const double e1 = std::exp(state.theta(j, 1) - hi);
        report.soft_selection[j] = e1 / (e0 + e1);
    }
    report.retained_edge_count = 0;
    for (int j = 0; j < m; ++j) {
        if (report.selection[j] > 0.5) ++report.retained_edge_count;
    }
    report.empty_selection = report.retained_edge_count == 0;
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

EdgeSelection harden_threshold(const EdgeSelection& soft, double threshold) {
    EdgeSelection out(soft.size());
    for (int i = 0; i < soft.size(); ++i) {
        out[i] = soft[i] >= threshold ? 1.0 : 0.0;
    }
    return out;
}

EdgeSelection harden_top_k(const EdgeSelection& soft, int k) {
    if (k < 0 || k > soft.size()) {
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " outside [0, " + std::to_string(soft.size()) +
                                    "]");
    }
    std::vector<int> order(static_cast<size_t>(soft.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return soft[a] > soft[b];  // stable: ties keep lower index first
    });
    EdgeSelection out = EdgeSelection::Zero(soft.size());
    for (int i = 0; i < k; ++i) out[order[static_cast<size_t>(i)]] = 1.0;
    return out;
}

}  // namespace graphpri
