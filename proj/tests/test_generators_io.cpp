#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphpri/edge_list_io.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/graph.hpp"

using namespace graphpri;

#ifndef GRAPHPRI_DATA_DIR
#define GRAPHPRI_DATA_DIR "data"
#endif

TEST_CASE("erdos-renyi generator") {
    const Graph g = gen_er(50, 0.2, 1);
    CHECK(g.node_count() == 50);
    // mean 245, sd ~ 14
    CHECK(g.edge_count() > 150);
    CHECK(g.edge_count() < 350);

    const Graph again = gen_er(50, 0.2, 1);
    CHECK(again.edge_count() == g.edge_count());
    for (int m = 0; m < g.edge_count(); ++m) {
        CHECK(again.edge(m).u == g.edge(m).u);
        CHECK(again.edge(m).v == g.edge(m).v);
    }
    CHECK(gen_er(50, 0.2, 2).edge_count() != g.edge_count());

    CHECK(gen_er(20, 0.0, 3).edge_count() == 0);
    CHECK(gen_er(20, 1.0, 3).edge_count() == 190);
    CHECK_THROWS_AS(gen_er(10, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_er(10, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_er(-2, 0.5, 1), std::invalid_argument);
}

TEST_CASE("barabasi-albert generator") {
    const int n = 60, m = 3;
    const Graph g = gen_ba(n, m, 4);
    CHECK(g.node_count() == n);
    CHECK(g.edge_count() == m * (m - 1) / 2 + (n - m) * m);
    CHECK(g.is_connected());

    // heavy-tail sanity: the maximum degree dwarfs the attachment size
    CHECK(g.degrees().maxCoeff() >= 2 * m);

    const Graph again = gen_ba(n, m, 4);
    for (int e = 0; e < g.edge_count(); ++e) {
        CHECK(again.edge(e).u == g.edge(e).u);
        CHECK(again.edge(e).v == g.edge(e).v);
    }

    CHECK(gen_ba(10, 1, 9).edge_count() == 9);
    CHECK_THROWS_AS(gen_ba(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_ba(5, 5, 1), std::invalid_argument);
}

TEST_CASE("stochastic block model") {
    const Graph g = gen_sbm({20, 20}, 0.5, 0.05, 11);
    CHECK(g.node_count() == 40);

    int within = 0, across = 0;
    for (const Edge& e : g.edges()) {
        const bool same = (e.u < 20) == (e.v < 20);
        (same ? within : across) += 1;
    }
    // expected within ~ 2 * C(20,2) * 0.5 = 190, across ~ 400 * 0.05 = 20
    CHECK(within > 120);
    CHECK(across < 60);
    CHECK(within > 3 * across);

    // degenerate block lists are fine: empty -> empty graph, zero-size
    // blocks contribute nothing
    CHECK(gen_sbm({}, 0.5, 0.5, 1).node_count() == 0);
    CHECK(gen_sbm({5, 0}, 0.5, 0.5, 1).node_count() == 5);
    CHECK(format_edge_list(gen_sbm({5, 0}, 0.5, 0.5, 1)) ==
          format_edge_list(gen_sbm({5}, 0.5, 0.5, 1)));
    CHECK_THROWS_AS(gen_sbm({5, 5}, 1.5, 0.5, 1), std::invalid_argument);
}

TEST_CASE("degenerate sbm equals erdos-renyi bit for bit") {
    const Graph er = gen_er(30, 0.3, 77);
    const Graph sbm = gen_sbm({10, 10, 10}, 0.3, 0.3, 77);
    REQUIRE(er.edge_count() == sbm.edge_count());
    for (int m = 0; m < er.edge_count(); ++m) {
        CHECK(er.edge(m).u == sbm.edge(m).u);
        CHECK(er.edge(m).v == sbm.edge(m).v);
    }
}

TEST_CASE("knn circle generator") {
    const Graph g = gen_knn_circle(20, 10);
    CHECK(g.node_count() == 20);
    CHECK(g.edge_count() == 20 * 5);
    const Eigen::VectorXd d = g.degrees();
    for (int i = 0; i < 20; ++i) CHECK(d[i] == 10.0);
    CHECK(g.is_connected());

    // odd k rounds down
    const Graph odd = gen_knn_circle(9, 3);
    CHECK(odd.degrees().maxCoeff() == 2.0);

    CHECK_THROWS_AS(gen_knn_circle(5, 5), std::invalid_argument);
    CHECK(gen_knn_circle(5, 0).edge_count() == 0);
    CHECK(gen_knn_circle(6, 2).edge_count() == 6);  // plain cycle
}

TEST_CASE("edge list round trip") {
    const Graph g = gen_er(25, 0.3, 13);
    const std::string text = format_edge_list(g);
    std::istringstream in(text);
    const Graph back = read_edge_list(in, "roundtrip");
    CHECK(back.node_count() == g.node_count());
    REQUIRE(back.edge_count() == g.edge_count());
    for (int m = 0; m < g.edge_count(); ++m) {
        CHECK(back.edge(m).u == g.edge(m).u);
        CHECK(back.edge(m).v == g.edge(m).v);
        CHECK(back.edge(m).weight == g.edge(m).weight);
    }
}

TEST_CASE("edge list formatting rules") {
    const Graph g =
        Graph::from_edges(4, {{2, 1, 1.0}, {0, 3, 2.5}, {0, 1, 1.0}});
    const std::string text = format_edge_list(g);
    // canonical: header, endpoints low-high, sorted, unit weights omitted
    CHECK(text == "# nodes 4\n0 1\n0 3 2.5\n1 2\n");
}

TEST_CASE("edge list parsing accepts comments and isolated nodes") {
    std::istringstream in(
        "# nodes 6\n"
        "# a comment\n"
        "\n"
        "0 1\n"
        "1 2 0.25   # trailing comment\n"
        "4 5\n");
    const Graph g = read_edge_list(in, "inline");
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(1).weight == 0.25);
    CHECK_FALSE(g.is_connected());
}

TEST_CASE("edge list without a header infers the node count") {
    std::istringstream in("0 1\n1 4\n");
    const Graph g = read_edge_list(in, "inline");
    CHECK(g.node_count() == 5);

    std::istringstream in2("0 1\n1 4\n");
    const Graph padded = read_edge_list(in2, "inline", 9);
    CHECK(padded.node_count() == 9);
}

TEST_CASE("edge list parse errors carry the location") {
    auto message_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_edge_list(in, "bad.el");
        } catch (const parse_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("0\n") .find("bad.el:1") != std::string::npos);
    CHECK(message_of("0 1\nx y\n").find("bad.el:2") != std::string::npos);
    CHECK(message_of("0 1 -2\n").find("weight") != std::string::npos);
    CHECK(message_of("0 0\n").find("self-loop") != std::string::npos);
    CHECK(message_of("0 1\n0 1\n").find("duplicate") != std::string::npos);
    CHECK(message_of("# nodes 2\n0 5\n").find("bad.el:2") != std::string::npos);
}

TEST_CASE("file io round trip and missing file error") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "graphpri_io_test.el";
    const Graph g = gen_ba(15, 2, 6);
    write_edge_list(g, tmp.string());
    const Graph back = read_edge_list(tmp.string());
    CHECK(back.edge_count() == g.edge_count());
    fs::remove(tmp);

    CHECK_THROWS_AS(read_edge_list("/nonexistent/nowhere.el"), parse_error);
}

TEST_CASE("bundled karate file matches the built-in graph") {
    const std::string path = std::string(GRAPHPRI_DATA_DIR) + "/karate.edgelist";
    if (!std::filesystem::exists(path)) {
        return;  // running from an unexpected directory; covered elsewhere
    }
    const Graph file = read_edge_list(path);
    const Graph builtin = karate_club();
    REQUIRE(file.edge_count() == builtin.edge_count());
    CHECK(file.node_count() == builtin.node_count());
    for (int m = 0; m < file.edge_count(); ++m) {
        CHECK(file.edge(m).u == builtin.edge(m).u);
        CHECK(file.edge(m).v == builtin.edge(m).v);
    }
}
