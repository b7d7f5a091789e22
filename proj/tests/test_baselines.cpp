#include <doctest.h>

#include <set>

#include "graphpri/baselines.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/graph.hpp"

using namespace graphpri;

namespace {

// two triangles joined by a bridge: 2-3 is the only inter-community edge
Graph barbell() {
    return Graph::from_edges(6, {{0, 1, 1.0},
                                 {0, 2, 1.0},
                                 {1, 2, 1.0},
                                 {2, 3, 1.0},
                                 {3, 4, 1.0},
                                 {3, 5, 1.0},
                                 {4, 5, 1.0}});
}

std::set<std::pair<int, int>> kept_pairs(const Graph& g,
                                         const EdgeSelection& mask) {
    std::set<std::pair<int, int>> out;
    for (int m = 0; m < g.edge_count(); ++m) {
        if (mask[m] > 0.5) out.insert({g.edge(m).u, g.edge(m).v});
    }
    return out;
}

}  // namespace

TEST_CASE("random sparsifier keeps exactly ceil(ratio * M) edges") {
    const Graph g = gen_er(25, 0.4, 3);
    const int m = g.edge_count();
    for (double ratio : {0.0, 0.1, 0.33, 0.5, 0.77, 1.0}) {
        const EdgeSelection mask = random_sparsifier(g, ratio, 5);
        const int kept = static_cast<int>(mask.sum() + 0.5);
        CHECK(kept == static_cast<int>(std::ceil(ratio * m - 1e-12)));
        CHECK(is_hard_selection(mask));
    }

    // 0.33 of 100 edges is 33, not 34: no floating point spill
    std::vector<Edge> edges;
    for (int i = 0; i < 100; ++i) edges.push_back({i, i + 1, 1.0});
    const Graph chain = Graph::from_edges(101, std::move(edges));
    CHECK(random_sparsifier(chain, 0.33, 1).sum() == 33.0);

    CHECK_THROWS_AS(random_sparsifier(g, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_sparsifier(g, 1.1, 1), std::invalid_argument);
}

TEST_CASE("random sparsifier is deterministic per seed") {
    const Graph g = gen_er(30, 0.3, 8);
    const EdgeSelection a = random_sparsifier(g, 0.5, 42);
    const EdgeSelection b = random_sparsifier(g, 0.5, 42);
    CHECK(a.cwiseEqual(b).all());
    const EdgeSelection c = random_sparsifier(g, 0.5, 43);
    CHECK_FALSE(a.cwiseEqual(c).all());
}

TEST_CASE("local degree keeps the strongest neighbor of every node") {
    const Graph g = barbell();

    // exponent 0.5: degrees {2,2,3,3,2,2}, every node keeps floor(sqrt(deg)) = 1
    const EdgeSelection half = local_degree_sparsifier(g, 0.5);
    const auto kept = kept_pairs(g, half);
    CHECK(kept == std::set<std::pair<int, int>>{
                      {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});

    // exponent 0 behaves identically here (top-1 per node)
    CHECK(kept_pairs(g, local_degree_sparsifier(g, 0.0)) == kept);

    // exponent 1 keeps everything
    CHECK(local_degree_sparsifier(g, 1.0).sum() == 7.0);

    CHECK_THROWS_AS(local_degree_sparsifier(g, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(local_degree_sparsifier(g, 1.2), std::invalid_argument);
}

TEST_CASE("local degree breaks neighbor-degree ties by lower id") {
    // star: all leaves tie at degree 1; the center keeps the two lowest ids
    const Graph star = Graph::from_edges(
        5, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}});
    const EdgeSelection mask = local_degree_sparsifier(star, 0.5);
    // every leaf keeps its only neighbor, so the union is all edges; check
    // the center's own picks via a one-sided variant: leaves of a 2-star
    const Graph lopsided = Graph::from_edges(
        6, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 4, 1.0}, {1, 5, 1.0}});
    // degrees: 0 -> 3, 1 -> 3, rest 1; floor(sqrt(3)) = 1
    // node 0 picks neighbor 1 (deg 3); node 1 picks neighbor 0; leaves pick
    // their hub; every edge is therefore kept except none... assert exact set
    const auto kept = kept_pairs(lopsided, local_degree_sparsifier(lopsided, 0.5));
    CHECK(kept == std::set<std::pair<int, int>>{
                      {0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(mask.sum() == 4.0);
}

TEST_CASE("local similarity drops the bridge first") {
    const Graph g = barbell();
    // keep 6 of 7: the inter-triangle bridge has the worst rank at both ends
    const EdgeSelection mask = local_similarity_sparsifier(g, 6.0 / 7.0);
    CHECK(mask.sum() == 6.0);
    const auto kept = kept_pairs(g, mask);
    CHECK(kept.count({2, 3}) == 0);

    CHECK(local_similarity_sparsifier(g, 1.0).sum() == 7.0);
    CHECK(local_similarity_sparsifier(g, 0.0).sum() == 0.0);
    CHECK_THROWS_AS(local_similarity_sparsifier(g, 2.0), std::invalid_argument);
}

TEST_CASE("local similarity is deterministic and ratio-exact") {
    const Graph g = gen_er(40, 0.25, 17);
    const int m = g.edge_count();
    for (double ratio : {0.2, 0.5, 0.8}) {
        const EdgeSelection a = local_similarity_sparsifier(g, ratio);
        const EdgeSelection b = local_similarity_sparsifier(g, ratio);
        CHECK(a.cwiseEqual(b).all());
        CHECK(static_cast<int>(a.sum() + 0.5) ==
              static_cast<int>(std::ceil(ratio * m - 1e-12)));
    }
}

TEST_CASE("effective resistances on hand graphs") {
    // every edge of a tree is a bridge: R = 1/weight
    const Graph p4 = Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 4.0}});
    const Eigen::VectorXd rp = effective_resistances(p4);
    CHECK(rp[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rp[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rp[2] == doctest::Approx(0.25).epsilon(1e-10));

    // unit triangle: direct edge in parallel with the two-edge path
    const Graph tri = Graph::from_edges(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
    const Eigen::VectorXd rt = effective_resistances(tri);
    for (int m = 0; m < 3; ++m) {
        CHECK(rt[m] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    }
}

TEST_CASE("foster sum identity") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const Graph g = gen_er(20, 0.3, seed);
        const Eigen::VectorXd r = effective_resistances(g);
        double total = 0.0;
        for (int m = 0; m < g.edge_count(); ++m) {
            total += g.edge(m).weight * r[m];
        }
        CHECK(total == doctest::Approx(g.node_count() - g.component_count())
                           .epsilon(1e-9));
    }

    // disconnected: identity still holds with the component count
    const Graph two = Graph::from_edges(6, {{0, 1, 1.0}, {1, 2, 1.0},
                                            {3, 4, 1.0}, {4, 5, 3.0}});
    const Eigen::VectorXd r = effective_resistances(two);
    double total = 0.0;
    for (int m = 0; m < two.edge_count(); ++m) {
        total += two.edge(m).weight * r[m];
    }
    CHECK(total == doctest::Approx(6 - 2).epsilon(1e-10));
}

TEST_CASE("effective resistance sparsifier") {
    const Graph g = gen_er(30, 0.3, 55);
    const int m = g.edge_count();
    const EdgeSelection a = effective_resistance_sparsifier(g, 0.4, 7);
    const EdgeSelection b = effective_resistance_sparsifier(g, 0.4, 7);
    CHECK(a.cwiseEqual(b).all());
    CHECK(is_hard_selection(a));
    CHECK(static_cast<int>(a.sum() + 0.5) ==
          static_cast<int>(std::ceil(0.4 * m - 1e-12)));

    CHECK(effective_resistance_sparsifier(g, 1.0, 7).sum() ==
          static_cast<double>(m));

    // bridges have maximal mu * R = 1: on a tree everything must be kept
    // regardless of seed once the count says so
    const Graph p5 = Graph::from_edges(
        5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}});
    CHECK(effective_resistance_sparsifier(p5, 1.0, 1).sum() == 4.0);
    CHECK(effective_resistance_sparsifier(p5, 0.5, 3).sum() == 2.0);
}
