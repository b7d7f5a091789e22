#include "graphpri/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace graphpri {

Graph Graph::from_edges(int node_count, std::vector<Edge> edges) {
    if (node_count < 0) {
        throw std::invalid_argument("node_count must be nonnegative, got " +
                                    std::to_string(node_count));
    }
    std::set<std::pair<int, int>> seen;
    for (size_t m = 0; m < edges.size(); ++m) {
        const Edge& e = edges[m];
        const std::string where = "edge " + std::to_string(m) + " (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")";
        if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
            throw std::invalid_argument(where + ": endpoint out of range [0," +
                                        std::to_string(node_count - 1) + "]");
        }
        if (e.u == e.v) {
            throw std::invalid_argument(where + ": self-loop");
        }
        if (!(e.weight > 0.0)) {
            throw std::invalid_argument(where + ": weight must be positive, got " +
                                        std::to_string(e.weight));
        }
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            throw std::invalid_argument(where + ": duplicate node pair");
        }
    }
    Graph g;
    g.node_count_ = node_count;
    g.edges_ = std::move(edges);
    return g;
}

Eigen::VectorXd Graph::degrees() const {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(node_count_);
    for (const Edge& e : edges_) {
        d[e.u] += e.weight;
        d[e.v] += e.weight;
    }
    return d;
}

Eigen::VectorXi Graph::unweighted_degrees() const {
    Eigen::VectorXi d = Eigen::VectorXi::Zero(node_count_);
    for (const Edge& e : edges_) {
        d[e.u] += 1;
        d[e.v] += 1;
    }
    return d;
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(node_count_, node_count_);
    for (const Edge& e : edges_) {
        w(e.u, e.v) = e.weight;
        w(e.v, e.u) = e.weight;
    }
    return w;
}

Eigen::MatrixXd Graph::laplacian() const {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(node_count_, node_count_);
    for (const Edge& e : edges_) {
        l(e.u, e.u) += e.weight;
        l(e.v, e.v) += e.weight;
        l(e.u, e.v) -= e.weight;
        l(e.v, e.u) -= e.weight;
    }
    return l;
}

const std::vector<std::vector<int>>& Graph::neighbors() const {
    if (neighbors_.empty() && node_count_ > 0) {
        neighbors_.assign(static_cast<size_t>(node_count_), {});
        for (const Edge& e : edges_) {
            neighbors_[static_cast<size_t>(e.u)].push_back(e.v);
            neighbors_[static_cast<size_t>(e.v)].push_back(e.u);
        }
        for (auto& list : neighbors_) std::sort(list.begin(), list.end());
    }
    return neighbors_;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(static_cast<size_t>(node_count_), -1);
    const auto& adj = neighbors();
    int next = 0;
    for (int start = 0; start < node_count_; ++start) {
        if (label[static_cast<size_t>(start)] != -1) continue;
        label[static_cast<size_t>(start)] = next;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (label[static_cast<size_t>(v)] == -1) {
                    label[static_cast<size_t>(v)] = next;
                    q.push(v);
                }
            }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    if (node_count_ == 0) return 0;
    auto labels = component_labels();
    return *std::max_element(labels.begin(), labels.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

Graph Graph::induced_by(const EdgeSelection& mask) const {
    validate_selection(*this, mask);
    std::vector<Edge> kept;
    for (int m = 0; m < edge_count(); ++m) {
        if (mask[m] > 0.5) kept.push_back(edges_[static_cast<size_t>(m)]);
    }
    return Graph::from_edges(node_count_, std::move(kept));
}

Graph build_graph(int node_count, const std::vector<Edge>& edges) {
    return Graph::from_edges(node_count, edges);
}

void validate_selection(const Graph& g, const EdgeSelection& w) {
    if (w.size() != g.edge_count()) {
        throw std::invalid_argument(
            "selection has " + std::to_string(w.size()) + " entries, graph has " +
            std::to_string(g.edge_count()) + " edges");
    }
    for (int m = 0; m < w.size(); ++m) {
        if (!(w[m] >= 0.0 && w[m] <= 1.0)) {
            throw std::invalid_argument("selection entry " + std::to_string(m) +
                                        " = " + std::to_string(w[m]) +
                                        " outside [0,1]");
        }
    }
}

bool is_hard_selection(const EdgeSelection& w) {
    for (int m = 0; m < w.size(); ++m) {
        if (w[m] != 0.0 && w[m] != 1.0) return false;
    }
    return true;
}

Graph karate_club() {
    static const int pairs[78][2] = {
        {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},
        {0, 8},   {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},
        {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},
        {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},
        {2, 13},  {2, 27},  {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},
        {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},  {6, 16},  {8, 30},
        {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32},
        {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
        {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25},
        {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
        {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33},
        {32, 33}};
    std::vector<Edge> edges;
    edges.reserve(78);
    for (const auto& p : pairs) edges.push_back({p[0], p[1], 1.0});
    return Graph::from_edges(34, std::move(edges));
}

Graph largest_component(const Graph& g) {
    if (g.node_count() == 0) return g;
    const std::vector<int> labels = g.component_labels();
    std::vector<int> size(static_cast<size_t>(g.component_count()), 0);
    for (int l : labels) ++size[static_cast<size_t>(l)];
    const int best = static_cast<int>(
        std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<int> remap(labels.size(), -1);
    int next = 0;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == best) remap[i] = next++;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int u = remap[static_cast<size_t>(e.u)];
        const int v = remap[static_cast<size_t>(e.v)];
        if (u >= 0 && v >= 0) edges.push_back({u, v, e.weight});
    }
    return Graph::from_edges(next, std::move(edges));
}

}  // namespace graphpri
