#include <doctest.h>

#include <cmath>

#include "graphpri/entropy.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/graph.hpp"
#include "graphpri/incidence.hpp"
#include "graphpri/linalg.hpp"
#include "graphpri/optimizer.hpp"
#include "graphpri/rng.hpp"

using namespace graphpri;

TEST_CASE("config validation rejects out-of-range values") {
    PriConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.beta = -0.1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.alpha = -1.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.temperature = 0.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.step_size = -0.05;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.samples = 0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.max_iterations = -1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("gumbel softmax sampling") {
    Eigen::MatrixXd theta(4, 2);
    theta << 0.0, 0.0, 1.0, -1.0, -2.0, 2.0, 0.5, 0.5;

    RandomStream a(7), b(7);
    const GumbelDraw da = gumbel_softmax_draw(theta, 1.0, true, a);
    const GumbelDraw db = gumbel_softmax_draw(theta, 1.0, true, b);
    CHECK(da.w.cwiseEqual(db.w).all());
    CHECK(da.soft.cwiseEqual(db.soft).all());

    for (int m = 0; m < 4; ++m) {
        CHECK((da.w[m] == 0.0 || da.w[m] == 1.0));
        CHECK(da.soft[m] > 0.0);
        CHECK(da.soft[m] < 1.0);
        // the hard value is the rounded soft value
        CHECK(da.w[m] == (da.soft[m] > 0.5 ? 1.0 : 0.0));
    }

    // hot limit: probabilities collapse to 1/2
    RandomStream hot(3);
    const GumbelDraw dh = gumbel_softmax_draw(theta, 1e9, false, hot);
    for (int m = 0; m < 4; ++m) {
        CHECK(dh.soft[m] == doctest::Approx(0.5).epsilon(1e-6));
    }

    // cold limit: essentially one-hot
    RandomStream cold(3);
    const GumbelDraw dc = gumbel_softmax_draw(theta, 1e-3, false, cold);
    for (int m = 0; m < 4; ++m) {
        CHECK(std::min(dc.soft[m], 1.0 - dc.soft[m]) < 1e-9);
    }

    Eigen::MatrixXd bad(4, 3);
    RandomStream r(1);
    CHECK_THROWS_AS(gumbel_softmax_draw(bad, 1.0, true, r),
                    std::invalid_argument);
    CHECK_THROWS_AS(gumbel_softmax_draw(theta, 0.0, true, r),
                    std::invalid_argument);
}

TEST_CASE("objective with barrier") {
    const Graph g = gen_knn_circle(10, 4);
    const IncidenceMatrix inc(g);
    const DensityMatrix rho = trace_normalize(g.laplacian());

    EdgeSelection w = EdgeSelection::Constant(g.edge_count(), 0.7);
    PriConfig cfg;
    cfg.beta = 1.5;

    // alpha = 0 reduces to the plain objective of the normalized subgraph
    cfg.alpha = 0.0;
    const double no_barrier = objective_with_barrier(inc, rho, w, cfg);
    const DensityMatrix sigma = trace_normalize(inc.subgraph_laplacian(w));
    CHECK(no_barrier ==
          doctest::Approx(pri_objective(sigma, rho, cfg.beta)).epsilon(1e-12));

    // the barrier only adds -alpha * sum(log degree)
    cfg.alpha = 0.25;
    const double with_barrier = objective_with_barrier(inc, rho, w, cfg);
    const Eigen::VectorXd deg = inc.selection_degrees(w);
    double logsum = 0.0;
    for (int i = 0; i < deg.size(); ++i) logsum += std::log(deg[i]);
    CHECK(with_barrier ==
          doctest::Approx(no_barrier - 0.25 * logsum).epsilon(1e-12));

    EdgeSelection zero = EdgeSelection::Zero(g.edge_count());
    CHECK_THROWS_AS(objective_with_barrier(inc, rho, zero, cfg),
                    empty_graph_error);
}

TEST_CASE("analytical gradient matches finite differences of the objective") {
    const Graph g = gen_er(10, 0.5, 11);
    REQUIRE(g.edge_count() > 4);
    const IncidenceMatrix inc(g);
    const DensityMatrix rho = trace_normalize(g.laplacian());

    RandomStream rng(31);
    for (double beta : {0.0, 0.7, 3.0}) {
        EdgeSelection w(g.edge_count());
        for (int m = 0; m < w.size(); ++m) w[m] = 0.2 + 0.6 * rng.uniform01();
        const Eigen::VectorXd grad = analytical_gradient(inc, rho, w, beta);

        PriConfig cfg;
        cfg.beta = beta;
        cfg.alpha = 0.0;
        const double h = 1e-6;
        for (int m = 0; m < std::min<int>(8, w.size()); ++m) {
            EdgeSelection wp = w, wm = w;
            wp[m] += h;
            wm[m] -= h;
            const double fd = (objective_with_barrier(inc, rho, wp, cfg) -
                               objective_with_barrier(inc, rho, wm, cfg)) /
                              (2.0 * h);
            CHECK(grad[m] == doctest::Approx(fd).epsilon(1e-4));
        }

        // scale invariance: the radial direction is flat
        CHECK(std::abs(w.dot(grad)) < 1e-10);
    }
}

TEST_CASE("analytical gradient requires an interior selection") {
    const Graph g = gen_knn_circle(6, 2);
    const IncidenceMatrix inc(g);
    EdgeSelection w = EdgeSelection::Constant(g.edge_count(), 0.5);
    CHECK_NOTHROW(analytical_gradient(inc, w, 1.0));
    w[0] = 0.0;
    CHECK_THROWS_AS(analytical_gradient(inc, w, 1.0), std::invalid_argument);
    w[0] = 1.0;
    CHECK_THROWS_AS(analytical_gradient(inc, w, 1.0), std::invalid_argument);
}

TEST_CASE("unnormalized entropy gradient against finite differences") {
    const Graph g = gen_er(8, 0.6, 5);
    const IncidenceMatrix inc(g);
    RandomStream rng(13);
    EdgeSelection w(g.edge_count());
    for (int m = 0; m < w.size(); ++m) w[m] = 0.3 + 0.5 * rng.uniform01();

    auto extended = [&](const EdgeSelection& sel) {
        const Eigen::MatrixXd s = inc.subgraph_laplacian(sel);
        const EigSym eig = eig_sym(s);
        double total = 0.0;
        for (int i = 0; i < eig.values.size(); ++i) {
            const double l = eig.values[i];
            if (l > kEntropyEigCutoff) total -= l * std::log(l) - l;
        }
        return total;
    };

    const Eigen::VectorXd grad = entropy_gradient_unnormalized(inc, w);
    const double h = 1e-6;
    for (int m = 0; m < w.size(); ++m) {
        EdgeSelection wp = w, wm = w;
        wp[m] += h;
        wm[m] -= h;
        const double fd = (extended(wp) - extended(wm)) / (2.0 * h);
        CHECK(grad[m] == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("sparsify_pri is deterministic and well formed") {
    const Graph g = gen_knn_circle(16, 6);
    PriConfig cfg;
    cfg.max_iterations = 60;
    cfg.samples = 2;
    cfg.seed = 9;

    const SparsifyReport a = sparsify_pri(g, cfg);
    const SparsifyReport b = sparsify_pri(g, cfg);
    CHECK(a.selection.cwiseEqual(b.selection).all());
    CHECK(a.soft_selection.cwiseEqual(b.soft_selection).all());
    CHECK(a.objective_trace == b.objective_trace);

    CHECK(a.selection.size() == g.edge_count());
    CHECK(static_cast<int>(a.objective_trace.size()) == cfg.max_iterations);
    CHECK(is_hard_selection(a.selection));
    CHECK(a.retained_edge_count ==
          static_cast<int>(a.selection.sum() + 0.5));
    for (int m = 0; m < a.soft_selection.size(); ++m) {
        CHECK(a.soft_selection[m] > 0.0);
        CHECK(a.soft_selection[m] < 1.0);
    }
    CHECK(a.wall_time_seconds >= 0.0);

    // different seed, different draw path
    cfg.seed = 10;
    const SparsifyReport c = sparsify_pri(g, cfg);
    CHECK_FALSE(c.soft_selection.cwiseEqual(a.soft_selection).all());

    CHECK_THROWS_AS(sparsify_pri(Graph::from_edges(3, {}), cfg),
                    empty_graph_error);
}

TEST_CASE("optimization lowers the training objective") {
    const Graph g = gen_knn_circle(20, 10);
    PriConfig cfg;
    cfg.beta = 1.0;
    cfg.max_iterations = 120;
    cfg.samples = 3;
    cfg.seed = 4;
    const SparsifyReport rep = sparsify_pri(g, cfg);
    const auto& trace = rep.objective_trace;
    REQUIRE(trace.size() == 120);
    // average of the last ten iterations beats the first ten
    double head = 0.0, tail = 0.0;
    for (int i = 0; i < 10; ++i) {
        head += trace[static_cast<size_t>(i)];
        tail += trace[trace.size() - 1 - static_cast<size_t>(i)];
    }
    CHECK(tail < head);
}

TEST_CASE("beta steers the retained edge count") {
    const Graph g = karate_club();
    PriConfig cfg;
    cfg.max_iterations = 150;
    cfg.samples = 2;
    cfg.seed = 2;

    cfg.beta = 0.0;
    const int sparse = sparsify_pri(g, cfg).retained_edge_count;
    cfg.beta = 50.0;
    const int dense = sparsify_pri(g, cfg).retained_edge_count;
    CHECK(sparse < dense);
}

TEST_CASE("soft sampling produces a relaxed selection") {
    const Graph g = gen_knn_circle(12, 4);
    PriConfig cfg;
    cfg.hard_sampling = false;
    cfg.max_iterations = 30;
    cfg.samples = 2;
    cfg.seed = 6;
    const SparsifyReport rep = sparsify_pri(g, cfg);
    CHECK_FALSE(is_hard_selection(rep.selection));
}

TEST_CASE("degree-entropy surrogate mode runs and selects edges") {
    const Graph g = gen_er(30, 0.3, 21);
    PriConfig cfg;
    cfg.use_degree_entropy_approx = true;
    cfg.max_iterations = 80;
    cfg.samples = 2;
    cfg.seed = 12;
    const SparsifyReport rep = sparsify_pri(g, cfg);
    CHECK(rep.retained_edge_count > 0);
    CHECK(rep.retained_edge_count <= g.edge_count());
    for (double v : rep.objective_trace) CHECK(std::isfinite(v));

    // two modes disagree in general
    PriConfig exact = cfg;
    exact.use_degree_entropy_approx = false;
    const SparsifyReport full = sparsify_pri(g, exact);
    CHECK_FALSE(full.soft_selection.cwiseEqual(rep.soft_selection).all());
}

TEST_CASE("hardening helpers") {
    EdgeSelection soft(5);
    soft << 0.9, 0.5, 0.1, 0.5, 0.6;

    const EdgeSelection thr = harden_threshold(soft, 0.5);
    CHECK(thr[0] == 1.0);
    CHECK(thr[1] == 1.0);  // threshold is inclusive
    CHECK(thr[2] == 0.0);
    CHECK(thr[3] == 1.0);
    CHECK(thr[4] == 1.0);

    const EdgeSelection top2 = harden_top_k(soft, 2);
    CHECK(top2.sum() == 2.0);
    CHECK(top2[0] == 1.0);
    CHECK(top2[4] == 1.0);

    // ties resolve to the lower index
    const EdgeSelection top3 = harden_top_k(soft, 3);
    CHECK(top3.sum() == 3.0);
    CHECK(top3[1] == 1.0);
    CHECK(top3[3] == 0.0);

    CHECK(harden_top_k(soft, 0).sum() == 0.0);
    CHECK_THROWS_AS(harden_top_k(soft, 9), std::invalid_argument);
}
