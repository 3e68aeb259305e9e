#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace richnet {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph, immutable after construction.
///
/// Vertices are dense internal indices assigned in first-appearance order of
/// the input; the original external IDs are kept as labels. Neighbor lists
/// are sorted ascending. No self-loops, no duplicate edges.
class Graph {
public:
    static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

    /// Builds a graph from labeled edges; self-loops are dropped and
    /// duplicates (either orientation) collapsed.
    static Graph from_labeled_edges(
        const std::vector<std::pair<std::string, std::string>>& edges);

    /// Builds a graph on vertices 0..n-1 (labels are the decimal indices).
    /// Vertices with no incident edge are kept; used for induced subgraphs
    /// and test fixtures.
    static Graph from_index_edges(VertexId n, const std::vector<Edge>& edges);

    VertexId vertex_count() const { return static_cast<VertexId>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adjacency_[v];
    }
    VertexId degree(VertexId v) const {
        check_vertex(v);
        return static_cast<VertexId>(adjacency_[v].size());
    }
    bool has_edge(VertexId u, VertexId v) const;

    const std::string& label(VertexId v) const {
        check_vertex(v);
        return labels_[v];
    }

    /// Unweighted shortest-path distances from source; unreachable vertices
    /// carry kUnreachable.
    std::vector<Distance> bfs_distances(VertexId source) const;

    /// Local clustering coefficient: 2*tri(v) / (deg(v)*(deg(v)-1)),
    /// 0 when deg(v) < 2.
    double clustering_coefficient(VertexId v) const;

    double average_clustering_coefficient() const;

    /// All edges as (u < v) pairs, sorted ascending.
    std::vector<Edge> edges() const;

    /// Subgraph induced on the given vertices. to_parent maps the subgraph's
    /// indices (assigned in the order vertices are listed) back to this
    /// graph's indices.
    Graph induced_subgraph(std::span<const VertexId> vertices,
                           std::vector<VertexId>* to_parent = nullptr) const;

    /// Copy of this graph with the given edges removed. Edges absent from
    /// the graph are ignored. Vertex set and labels are unchanged.
    Graph without_edges(std::span<const Edge> removed) const;

    /// One "src dst" label pair per line, ordered by (min,max) endpoint.
    void serialize(std::ostream& out) const;

private:
    Graph(std::vector<std::vector<VertexId>> adjacency, std::vector<std::string> labels);

    void check_vertex(VertexId v) const {
        if (v >= adjacency_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Parses a whitespace-delimited edge list. Lines starting with '#' or '%'
/// are comments. Throws ParseError on a data line without exactly two
/// tokens and std::runtime_error when no edges remain.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);

}  // namespace richnet
