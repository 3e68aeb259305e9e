#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "richnet/graph.hpp"

namespace richnet {

enum class CentralityKind { closeness, betweenness };

enum class BetweennessVariant {
    per_pair,       // sum of sigma_st(v)/sigma_st over unordered pairs (standard)
    paper_literal,  // sum of sigma_st(v) over pairs, divided by the global path count
};

struct CentralityScores {
    CentralityKind kind;
    std::vector<double> scores;
};

/// Closeness per the reciprocal-distance form: CC(v) = 1/(n-1) * sum 1/dist(v,s).
/// Unreachable pairs contribute zero, so disconnected graphs are fine.
/// Throws on n < 2.
CentralityScores closeness_all(const Graph& g, unsigned threads = 1);

/// Exact betweenness via single-source dependency accumulation. Each
/// unordered pair is counted once; endpoints are excluded. With threads > 1
/// sources are striped and partials combined in stripe order, so a given
/// thread count is deterministic.
CentralityScores betweenness_all(const Graph& g,
                                 BetweennessVariant variant = BetweennessVariant::per_pair,
                                 unsigned threads = 1);

struct RankedSet {
    std::size_t k = 0;
    std::vector<VertexId> members;  // score descending, index ascending on ties
};

/// Deterministic top-k; k > n returns all vertices.
RankedSet top_k(const CentralityScores& scores, std::size_t k);

enum class HighCentralityTag { bc, cc, both };

struct HighCentralitySet {
    std::vector<VertexId> vertices;             // sorted ascending
    std::vector<HighCentralityTag> tags;        // parallel to vertices
    std::size_t size() const { return vertices.size(); }
};

/// N_hc: union of the top-k betweenness and top-k closeness vertices.
HighCentralitySet ground_truth(const Graph& g, std::size_t k,
                               BetweennessVariant variant = BetweennessVariant::per_pair,
                               unsigned threads = 1);

/// CSV `vertex_label,score`, score descending (index ascending on ties).
void write_scores_csv(std::ostream& out, const Graph& g, const CentralityScores& scores);

const char* to_string(CentralityKind kind);
const char* to_string(BetweennessVariant variant);

}  // namespace richnet
