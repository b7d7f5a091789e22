#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphpri/baselines.hpp"
#include "graphpri/density.hpp"
#include "graphpri/edge_list_io.hpp"
#include "graphpri/entropy.hpp"
#include "graphpri/evaluation.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/graph.hpp"
#include "graphpri/incidence.hpp"
#include "graphpri/optimizer.hpp"
#include "graphpri/version.hpp"

namespace py = pybind11;
namespace gp = graphpri;

PYBIND11_MODULE(_graphpri, m) {
    m.doc() = "entropy-guided graph sparsification core";
    m.attr("__version__") = gp::kVersion;
    m.attr("COMMIT") = gp::kCommit;

    py::register_exception<gp::empty_graph_error>(m, "EmptyGraphError",
                                                  PyExc_ValueError);
    py::register_exception<gp::disconnected_graph_error>(
        m, "DisconnectedGraphError", PyExc_ValueError);
    py::register_exception<gp::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<gp::optimizer_diverged_error>(
        m, "OptimizerDivergedError", PyExc_RuntimeError);

    py::class_<gp::Edge>(m, "Edge")
        .def(py::init<>([](int u, int v, double weight) {
                 return gp::Edge{u, v, weight};
             }),
             py::arg("u"), py::arg("v"), py::arg("weight") = 1.0)
        .def_readonly("u", &gp::Edge::u)
        .def_readonly("v", &gp::Edge::v)
        .def_readonly("weight", &gp::Edge::weight)
        .def("__repr__", [](const gp::Edge& e) {
            return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                   ", " + std::to_string(e.weight) + ")";
        });

    py::class_<gp::Graph>(m, "Graph")
        .def(py::init([](int node_count,
                         const std::vector<std::tuple<int, int, double>>& edges) {
                 std::vector<gp::Edge> es;
                 es.reserve(edges.size());
                 for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
                 return gp::Graph::from_edges(node_count, std::move(es));
             }),
             py::arg("node_count"), py::arg("edges"))
        .def_property_readonly("node_count", &gp::Graph::node_count)
        .def_property_readonly("edge_count", &gp::Graph::edge_count)
        .def("edges",
             [](const gp::Graph& g) {
                 std::vector<std::tuple<int, int, double>> out;
                 out.reserve(g.edges().size());
                 for (const gp::Edge& e : g.edges()) {
                     out.emplace_back(e.u, e.v, e.weight);
                 }
                 return out;
             })
        .def("degrees", &gp::Graph::degrees)
        .def("unweighted_degrees", &gp::Graph::unweighted_degrees)
        .def("adjacency", &gp::Graph::adjacency)
        .def("laplacian", &gp::Graph::laplacian)
        .def("is_connected", &gp::Graph::is_connected)
        .def("component_count", &gp::Graph::component_count)
        .def("induced_by", &gp::Graph::induced_by, py::arg("selection"))
        .def("__repr__", [](const gp::Graph& g) {
            return "Graph(node_count=" + std::to_string(g.node_count()) +
                   ", edge_count=" + std::to_string(g.edge_count()) + ")";
        });

    // generators
    m.def("gen_er", &gp::gen_er, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_ba", &gp::gen_ba, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("gen_sbm", &gp::gen_sbm, py::arg("block_sizes"), py::arg("p_in"),
          py::arg("p_out"), py::arg("seed"));
    m.def("gen_knn_circle", &gp::gen_knn_circle, py::arg("n"), py::arg("k"));
    m.def("karate_club", &gp::karate_club);

    // IO
    m.def(
        "read_edge_list",
        [](const std::string& path) { return gp::read_edge_list(path); },
        py::arg("path"));
    m.def("write_edge_list", &gp::write_edge_list, py::arg("graph"),
          py::arg("path"));
    m.def("format_edge_list", &gp::format_edge_list, py::arg("graph"));

    // spectral / information measures
    m.def(
        "density_matrix",
        [](const gp::Graph& g) { return gp::trace_normalize(g.laplacian()).values(); },
        py::arg("graph"), "trace-normalized Laplacian as a dense matrix");
    m.def(
        "von_neumann_entropy",
        [](const gp::Graph& g) { return gp::von_neumann_entropy(g); },
        py::arg("graph"));
    m.def(
        "qjs_divergence",
        [](const gp::Graph& a, const gp::Graph& b) {
            return gp::qjs_divergence(gp::trace_normalize(a.laplacian()),
                                      gp::trace_normalize(b.laplacian()));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "pri_objective",
        [](const gp::Graph& subgraph, const gp::Graph& original, double beta) {
            return gp::pri_objective(gp::trace_normalize(subgraph.laplacian()),
                                     gp::trace_normalize(original.laplacian()),
                                     beta);
        },
        py::arg("subgraph"), py::arg("original"), py::arg("beta"));
    m.def("shannon_degree_entropy", &gp::shannon_degree_entropy,
          py::arg("graph"));
    m.def(
        "entropy_gap_bound",
        [](const gp::Graph& g) {
            const gp::EntropyGapBound b = gp::entropy_gap_bound(g);
            return py::dict(py::arg("shannon") = b.shannon,
                            py::arg("von_neumann") = b.von_neumann,
                            py::arg("gap") = b.gap,
                            py::arg("upper_bound") = b.upper_bound);
        },
        py::arg("graph"));
    m.def("fiedler_vector", &gp::fiedler_vector, py::arg("laplacian"));
    m.def("spectral_distance", &gp::spectral_distance, py::arg("rho"),
          py::arg("sigma"), py::arg("probe"));
    m.def("centralization", &gp::centralization, py::arg("graph"));

    // optimizer
    py::class_<gp::PriConfig>(m, "PriConfig")
        .def(py::init<>())
        .def_readwrite("beta", &gp::PriConfig::beta)
        .def_readwrite("alpha", &gp::PriConfig::alpha)
        .def_readwrite("temperature", &gp::PriConfig::temperature)
        .def_readwrite("step_size", &gp::PriConfig::step_size)
        .def_readwrite("samples", &gp::PriConfig::samples)
        .def_readwrite("max_iterations", &gp::PriConfig::max_iterations)
        .def_readwrite("seed", &gp::PriConfig::seed)
        .def_readwrite("hard_sampling", &gp::PriConfig::hard_sampling)
        .def_readwrite("use_degree_entropy_approx",
                       &gp::PriConfig::use_degree_entropy_approx);

    py::class_<gp::SparsifyReport>(m, "SparsifyReport")
        .def_readonly("selection", &gp::SparsifyReport::selection)
        .def_readonly("soft_selection", &gp::SparsifyReport::soft_selection)
        .def_readonly("objective_trace", &gp::SparsifyReport::objective_trace)
        .def_readonly("retained_edge_count",
                      &gp::SparsifyReport::retained_edge_count)
        .def_readonly("empty_selection", &gp::SparsifyReport::empty_selection)
        .def_readonly("wall_time_seconds",
                      &gp::SparsifyReport::wall_time_seconds);

    m.def("sparsify_pri", &gp::sparsify_pri, py::arg("graph"),
          py::arg("config") = gp::PriConfig{});
    m.def("harden_threshold", &gp::harden_threshold, py::arg("soft"),
          py::arg("threshold") = 0.5);
    m.def("harden_top_k", &gp::harden_top_k, py::arg("soft"), py::arg("k"));

    // baselines
    m.def("random_sparsifier", &gp::random_sparsifier, py::arg("graph"),
          py::arg("ratio"), py::arg("seed"));
    m.def("local_degree_sparsifier", &gp::local_degree_sparsifier,
          py::arg("graph"), py::arg("exponent"));
    m.def("local_similarity_sparsifier", &gp::local_similarity_sparsifier,
          py::arg("graph"), py::arg("ratio"));
    m.def("effective_resistance_sparsifier", &gp::effective_resistance_sparsifier,
          py::arg("graph"), py::arg("ratio"), py::arg("seed"));
    m.def("effective_resistances", &gp::effective_resistances, py::arg("graph"));
}
