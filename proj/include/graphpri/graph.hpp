#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphpri {

// Raised when an operation needs at least one edge / positive trace.
class empty_graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by operations that require a connected graph (e.g. Fiedler vector).
class disconnected_graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

// Soft or hard edge selection: one value in [0,1] per edge, indexed in the
// graph's stable edge order.
using EdgeSelection = Eigen::VectorXd;

// Undirected weighted graph. Node ids are 0..node_count()-1; the edge list
// order is stable and is the indexing used by incidence columns and edge
// selections everywhere in this library.
class Graph {
public:
    Graph() = default;

    // Validates and takes ownership of the edge list. Rejects out-of-range
    // endpoints, self-loops, duplicate node pairs (in either orientation) and
    // non-positive weights with a diagnostic naming the offending edge.
    static Graph from_edges(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int m) const { return edges_[static_cast<size_t>(m)]; }

    // Weighted degree vector (sum of incident weights).
    Eigen::VectorXd degrees() const;
    // Degree counting edges, ignoring weights.
    Eigen::VectorXi unweighted_degrees() const;

    Eigen::MatrixXd adjacency() const;
    // Combinatorial Laplacian D - W.
    Eigen::MatrixXd laplacian() const;

    bool is_connected() const;
    int component_count() const;
    // Component label per node, labels 0..k-1 in order of first appearance.
    std::vector<int> component_labels() const;

    // Subgraph keeping edges with mask > 0.5; node set unchanged, surviving
    // edges keep their weights and relative order.
    Graph induced_by(const EdgeSelection& mask) const;

    // Neighbor lists (by node id, ascending), built once on demand.
    const std::vector<std::vector<int>>& neighbors() const;

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    mutable std::vector<std::vector<int>> neighbors_;
};

// Convenience constructor used throughout tests and tools.
Graph build_graph(int node_count, const std::vector<Edge>& edges);

// Throws std::invalid_argument unless w has one entry per edge, all in [0,1].
void validate_selection(const Graph& g, const EdgeSelection& w);

// True if every entry is exactly 0 or 1.
bool is_hard_selection(const EdgeSelection& w);

// Zachary karate club (34 nodes, 78 edges, unit weights); also shipped as
// data/karate.edgelist.
Graph karate_club();

// Largest connected component with nodes relabeled 0..k-1 in original id
// order (ties between equal-size components: the one appearing first).
Graph largest_component(const Graph& g);

}  // namespace graphpri
