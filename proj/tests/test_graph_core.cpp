#include <doctest.h>

#include <set>

#include "graphpri/graph.hpp"
#include "graphpri/incidence.hpp"
#include "graphpri/rng.hpp"

using namespace graphpri;

namespace {

Graph path3() {
    return Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
}

Graph weighted_triangle() {
    return Graph::from_edges(3, {{0, 1, 2.0}, {1, 2, 3.0}, {0, 2, 5.0}});
}

}  // namespace

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, -2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 1.0}, {1, 0, 1.0}}),
                    std::invalid_argument);

    const Graph g = Graph::from_edges(4, {});
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("degrees, adjacency, laplacian agree on a weighted triangle") {
    const Graph g = weighted_triangle();
    const Eigen::VectorXd d = g.degrees();
    CHECK(d[0] == doctest::Approx(7.0));
    CHECK(d[1] == doctest::Approx(5.0));
    CHECK(d[2] == doctest::Approx(8.0));

    const Eigen::VectorXi du = g.unweighted_degrees();
    CHECK(du[0] == 2);

    const Eigen::MatrixXd A = g.adjacency();
    CHECK(A(0, 1) == 2.0);
    CHECK(A(1, 0) == 2.0);
    CHECK(A(0, 2) == 5.0);
    CHECK(A(0, 0) == 0.0);

    const Eigen::MatrixXd L = g.laplacian();
    CHECK((L - L.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(L.rowwise().sum().cwiseAbs().maxCoeff() ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(L(0, 0) == 7.0);
    CHECK(L(0, 1) == -2.0);
}

TEST_CASE("connectivity and component labels") {
    const Graph g = Graph::from_edges(5, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}});
    CHECK_FALSE(g.is_connected());
    CHECK(g.component_count() == 2);
    const std::vector<int> labels = g.component_labels();
    CHECK(labels[0] == labels[1]);
    CHECK(labels[1] == labels[2]);
    CHECK(labels[3] == labels[4]);
    CHECK(labels[0] != labels[3]);

    CHECK(path3().is_connected());
    CHECK(Graph::from_edges(1, {}).is_connected());
    CHECK_FALSE(Graph::from_edges(2, {}).is_connected());
}

TEST_CASE("induced_by keeps edges with mask above one half") {
    const Graph g = weighted_triangle();
    EdgeSelection mask(3);
    mask << 1.0, 0.0, 0.7;
    const Graph sub = g.induced_by(mask);
    CHECK(sub.node_count() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.edge(0).u == 0);
    CHECK(sub.edge(0).v == 1);
    CHECK(sub.edge(1).weight == 5.0);

    EdgeSelection wrong(2);
    CHECK_THROWS_AS(g.induced_by(wrong), std::invalid_argument);
}

TEST_CASE("selection validation") {
    const Graph g = path3();
    EdgeSelection ok(2);
    ok << 0.5, 1.0;
    CHECK_NOTHROW(validate_selection(g, ok));
    CHECK_FALSE(is_hard_selection(ok));
    ok << 0.0, 1.0;
    CHECK(is_hard_selection(ok));

    EdgeSelection bad(2);
    bad << -0.1, 0.5;
    CHECK_THROWS_AS(validate_selection(g, bad), std::invalid_argument);
    bad << 0.1, 1.5;
    CHECK_THROWS_AS(validate_selection(g, bad), std::invalid_argument);
}

TEST_CASE("karate club graph matches the published sizes") {
    const Graph g = karate_club();
    CHECK(g.node_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(g.is_connected());
    const Eigen::VectorXd d = g.degrees();
    CHECK(d[0] == 16.0);
    CHECK(d[33] == 17.0);
    CHECK(d.sum() == 156.0);
    for (const Edge& e : g.edges()) CHECK(e.weight == 1.0);
}

TEST_CASE("incidence matrix factorizes the laplacian") {
    const Graph g = weighted_triangle();
    const IncidenceMatrix inc(g);
    const Eigen::MatrixXd B = inc.values();
    CHECK(B.rows() == 3);
    CHECK(B.cols() == 3);
    CHECK((B * B.transpose() - g.laplacian()).cwiseAbs().maxCoeff() < 1e-12);

    // head (lower node index) gets the positive entry
    CHECK(B(0, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(B(1, 0) == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("subgraph laplacian matches explicit reconstruction") {
    const Graph g = karate_club();
    const IncidenceMatrix inc(g);
    RandomStream rng(99);
    for (int t = 0; t < 10; ++t) {
        EdgeSelection w(g.edge_count());
        for (int m = 0; m < w.size(); ++m) {
            w[m] = rng.uniform01() < 0.5 ? 0.0 : 1.0;
        }
        const Eigen::MatrixXd fast = inc.subgraph_laplacian(w);
        const Eigen::MatrixXd direct = g.induced_by(w).laplacian();
        CHECK((fast - direct).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("subgraph laplacian is linear in the selection") {
    const Graph g = weighted_triangle();
    const IncidenceMatrix inc(g);
    EdgeSelection a(3), b(3);
    a << 0.3, 0.2, 0.9;
    b << 0.5, 0.7, 0.1;
    const Eigen::MatrixXd sum_of_parts =
        inc.subgraph_laplacian(a) + inc.subgraph_laplacian(b);
    const Eigen::MatrixXd of_sum = inc.subgraph_laplacian(a + b);
    CHECK((sum_of_parts - of_sum).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("selection trace and degrees") {
    const Graph g = weighted_triangle();
    const IncidenceMatrix inc(g);
    EdgeSelection w(3);
    w << 1.0, 0.5, 0.0;
    // trace = 2 * (1*2 + 0.5*3 + 0*5)
    CHECK(inc.selection_trace(w) == doctest::Approx(7.0));
    const Eigen::VectorXd deg = inc.selection_degrees(w);
    CHECK(deg[0] == doctest::Approx(2.0));
    CHECK(deg[1] == doctest::Approx(3.5));
    CHECK(deg[2] == doctest::Approx(1.5));
    CHECK(deg.sum() == doctest::Approx(inc.selection_trace(w)));
}

TEST_CASE("quad_form evaluates b_m^T X b_m") {
    const Graph g = weighted_triangle();
    const IncidenceMatrix inc(g);
    Eigen::MatrixXd X(3, 3);
    X << 2, 1, 0, 1, 3, -1, 0, -1, 4;
    const Eigen::MatrixXd B = inc.values();
    for (int m = 0; m < 3; ++m) {
        const double direct = B.col(m).transpose() * X * B.col(m);
        CHECK(inc.quad_form(X, m) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("random stream is deterministic and well ranged") {
    RandomStream a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.uniform01() == b.uniform01());
    }
    RandomStream c(123);
    double lo = 1.0, hi = 0.0, mean = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = c.uniform01();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        mean += u;
    }
    mean /= n;
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(mean == doctest::Approx(0.5).epsilon(0.02));

    RandomStream d(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t x = d.uniform_int(0, 9);
        CHECK(x <= 9);
        seen.insert(x);
    }
    CHECK(seen.size() == 10);

    RandomStream e(11);
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double x = e.normal();
        sum += x;
        sq += x * x;
    }
    CHECK(sum / 20000 == doctest::Approx(0.0).epsilon(0.05));
    CHECK(sq / 20000 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("derived seeds differ across labels and indices") {
    const std::uint64_t root = 42;
    CHECK(derive_seed(root, "alpha") != derive_seed(root, "beta"));
    CHECK(derive_seed(root, "alpha", 0) != derive_seed(root, "alpha", 1));
    CHECK(derive_seed(root, "alpha") == derive_seed(root, "alpha"));
    CHECK(derive_seed(1, "alpha") != derive_seed(2, "alpha"));
}
