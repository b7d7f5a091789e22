#include "graphpri/edge_list_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace graphpri {

namespace {
[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
    throw parse_error(name + ":" + std::to_string(line) + ": " + what);
}
}  // namespace

Graph read_edge_list(std::istream& in, const std::string& name,
                     std::optional<int> node_count_override) {
    std::vector<Edge> edges;
    std::optional<int> header_nodes;
    int max_node = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // "# nodes N" header, otherwise '#' starts a comment
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream hs(line.substr(hash + 1));
            std::string word;
            long long n;
            if (hs >> word && word == "nodes" && hs >> n) {
                if (n < 0) fail(name, lineno, "negative node count");
                header_nodes = static_cast<int>(n);
            }
            line.erase(hash);
        }
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            fail(name, lineno, "expected node id");
        }
        if (!(ls >> v)) fail(name, lineno, "expected two node ids");
        double weight = 1.0;
        if (ls >> weight) {
            if (!(weight > 0.0)) fail(name, lineno, "weight must be positive");
        }
        std::string extra;
        if (ls >> extra) fail(name, lineno, "trailing token '" + extra + "'");
        if (u < 0 || v < 0) fail(name, lineno, "negative node id");
        if (u > 1000000000 || v > 1000000000) fail(name, lineno, "node id too large");
        if (header_nodes && std::max(u, v) >= *header_nodes) {
            fail(name, lineno,
                 "node id " + std::to_string(std::max(u, v)) +
                     " exceeds declared node count " +
                     std::to_string(*header_nodes));
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v), weight});
        max_node = std::max(max_node, static_cast<int>(std::max(u, v)));
    }
    int node_count = max_node + 1;
    if (header_nodes) node_count = *header_nodes;
    if (node_count_override) node_count = *node_count_override;
    try {
        return Graph::from_edges(node_count, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(name + ": " + e.what());
    }
}

Graph read_edge_list(const std::string& path,
                     std::optional<int> node_count_override) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open for reading");
    return read_edge_list(in, path, node_count_override);
}

std::string format_edge_list(const Graph& g) {
    std::vector<std::pair<std::pair<int, int>, double>> rows;
    rows.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        rows.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, e.weight});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out = "# nodes " + std::to_string(g.node_count()) + "\n";
    char buf[64];
    for (const auto& r : rows) {
        out += std::to_string(r.first.first);
        out += ' ';
        out += std::to_string(r.first.second);
        if (r.second != 1.0) {
            std::snprintf(buf, sizeof(buf), " %.12g", r.second);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error(path + ": cannot open for writing");
    out << format_edge_list(g);
    if (!out) throw parse_error(path + ": write failed");
}

}  // namespace graphpri
