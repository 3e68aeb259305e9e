// Shared graph fixtures for tests.
#pragma once

#include <vector>

#include "richnet/graph.hpp"
#include "richnet/rng.hpp"

namespace richnet::fixtures {

inline Graph path_graph(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_index_edges(n, edges);
}

inline Graph cycle_graph(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back(make_edge(n - 1, 0));
    return Graph::from_index_edges(n, edges);
}

inline Graph complete_graph(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_index_edges(n, edges);
}

/// Star with `leaves` leaves; vertex 0 is the center.
inline Graph star_graph(VertexId leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph::from_index_edges(leaves + 1, edges);
}

/// K4 on 0..3 plus a pendant vertex 4 attached to 0.
inline Graph clique_with_pendant() {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId v = u + 1; v < 4; ++v) edges.push_back({u, v});
    edges.push_back({0, 4});
    return Graph::from_index_edges(5, edges);
}

/// Two K5s (0..4 and 5..9) joined by a path through `path_len` fresh vertices.
inline Graph barbell(VertexId path_len) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = u + 1; v < 5; ++v) edges.push_back({u, v});
    for (VertexId u = 5; u < 10; ++u)
        for (VertexId v = u + 1; v < 10; ++v) edges.push_back({u, v});
    VertexId prev = 4;
    VertexId next = 10;
    for (VertexId i = 0; i < path_len; ++i) {
        edges.push_back(make_edge(prev, next));
        prev = next++;
    }
    edges.push_back(make_edge(prev, 5));
    return Graph::from_index_edges(10 + path_len, edges);
}

/// Erdos-Renyi G(n, p) with seeded edge draws.
inline Graph gnp(VertexId n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < p)
                edges.push_back({u, v});
        }
    }
    return Graph::from_index_edges(n, edges);
}

/// Single-rich-club toy: K8 core (0..7) with a 92-vertex tree periphery.
/// n = 100, m = 120.
inline Graph single_club_toy() {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < 8; ++u)
        for (VertexId v = u + 1; v < 8; ++v) edges.push_back({u, v});
    for (VertexId v = 8; v < 100; ++v) {
        VertexId parent = v < 16 ? v - 8 : (v - 16) / 2 + 8;
        edges.push_back(make_edge(parent, v));
    }
    return Graph::from_index_edges(100, edges);
}

/// Scattered-rich-club toy: three K6s (0..5, 6..11, 12..17) bridged by two
/// 12-vertex paths, with 54 pendant vertices spread over the club members.
/// n = 96, m = 125 (within 5% of the single-club toy on both counts).
inline Graph scattered_toy() {
    std::vector<Edge> edges;
    for (VertexId base : {0u, 6u, 12u})
        for (VertexId u = base; u < base + 6; ++u)
            for (VertexId v = u + 1; v < base + 6; ++v) edges.push_back({u, v});
    // bridges: club A (vertex 0) -- 18..29 -- club B (vertex 6),
    //          club B (vertex 7) -- 30..41 -- club C (vertex 12)
    VertexId prev = 0;
    for (VertexId v = 18; v < 30; ++v) {
        edges.push_back(make_edge(prev, v));
        prev = v;
    }
    edges.push_back(make_edge(prev, 6));
    prev = 7;
    for (VertexId v = 30; v < 42; ++v) {
        edges.push_back(make_edge(prev, v));
        prev = v;
    }
    edges.push_back(make_edge(prev, 12));
    for (VertexId v = 42; v < 96; ++v) edges.push_back(make_edge((v - 42) % 18, v));
    return Graph::from_index_edges(96, edges);
}

}  // namespace richnet::fixtures
