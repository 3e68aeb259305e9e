#include "richnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace richnet {

Graph::Graph(std::vector<std::vector<VertexId>> adjacency, std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
    std::size_t total = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        total += nbrs.size();
    }
    edge_count_ = total / 2;
}

Graph Graph::from_labeled_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, VertexId> index_of;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = index_of.try_emplace(token, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::vector<Edge> pairs;
    pairs.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        VertexId u = intern(a);
        VertexId v = intern(b);
        if (u == v) continue;
        pairs.push_back(make_edge(u, v));
    }

    std::vector<std::vector<VertexId>> adjacency(labels.size());
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const Edge& e : pairs) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    return Graph(std::move(adjacency), std::move(labels));
}

Graph Graph::from_index_edges(VertexId n, const std::vector<Edge>& edges) {
    std::vector<std::vector<VertexId>> adjacency(n);
    std::vector<Edge> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (e.u == e.v) continue;
        pairs.push_back(make_edge(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const Edge& e : pairs) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    std::vector<std::string> labels(n);
    for (VertexId v = 0; v < n; ++v) labels[v] = std::to_string(v);
    return Graph(std::move(adjacency), std::move(labels));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Distance> Graph::bfs_distances(VertexId source) const {
    check_vertex(source);
    std::vector<Distance> dist(vertex_count(), kUnreachable);
    dist[source] = 0;
    std::queue<VertexId> queue;
    queue.push(source);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (VertexId w : adjacency_[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

double Graph::clustering_coefficient(VertexId v) const {
    check_vertex(v);
    const auto& nbrs = adjacency_[v];
    std::size_t deg = nbrs.size();
    if (deg < 2) return 0.0;
    std::size_t triangles = 0;
    for (std::size_t i = 0; i < deg; ++i) {
        const auto& other = adjacency_[nbrs[i]];
        // count neighbors of nbrs[i] that are also neighbors of v, above i
        for (std::size_t j = i + 1; j < deg; ++j) {
            if (std::binary_search(other.begin(), other.end(), nbrs[j])) ++triangles;
        }
    }
    return 2.0 * static_cast<double>(triangles) /
           (static_cast<double>(deg) * static_cast<double>(deg - 1));
}

double Graph::average_clustering_coefficient() const {
    if (vertex_count() == 0) return 0.0;
    double sum = 0.0;
    for (VertexId v = 0; v < vertex_count(); ++v) sum += clustering_coefficient(v);
    return sum / static_cast<double>(vertex_count());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) result.push_back(Edge{u, v});
        }
    }
    return result;
}

Graph Graph::induced_subgraph(std::span<const VertexId> vertices,
                              std::vector<VertexId>* to_parent) const {
    std::unordered_map<VertexId, VertexId> local;
    local.reserve(vertices.size());
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (VertexId v : vertices) {
        check_vertex(v);
        if (local.try_emplace(v, static_cast<VertexId>(labels.size())).second)
            labels.push_back(labels_[v]);
    }
    std::vector<std::vector<VertexId>> adjacency(labels.size());
    for (const auto& [parent, self] : local) {
        for (VertexId w : adjacency_[parent]) {
            auto it = local.find(w);
            if (it != local.end()) adjacency[self].push_back(it->second);
        }
    }
    if (to_parent) {
        to_parent->assign(labels.size(), 0);
        for (const auto& [parent, self] : local) (*to_parent)[self] = parent;
    }
    return Graph(std::move(adjacency), std::move(labels));
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> sorted(removed.begin(), removed.end());
    for (Edge& e : sorted) e = make_edge(e.u, e.v);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto is_removed = [&](VertexId u, VertexId v) {
        return std::binary_search(sorted.begin(), sorted.end(), make_edge(u, v));
    };
    std::vector<std::vector<VertexId>> adjacency(vertex_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (!is_removed(u, v)) adjacency[u].push_back(v);
        }
    }
    return Graph(std::move(adjacency), labels_);
}

void Graph::serialize(std::ostream& out) const {
    for (const Edge& e : edges()) out << labels_[e.u] << ' ' << labels_[e.v] << '\n';
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;
        std::istringstream fields(line);
        std::string src, dst, extra;
        if (!(fields >> src >> dst) || (fields >> extra))
            throw ParseError(line_no, "expected two whitespace-separated tokens");
        edges.emplace_back(std::move(src), std::move(dst));
    }
    if (edges.empty()) throw std::runtime_error("no edges");
    return Graph::from_labeled_edges(edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

}  // namespace richnet
