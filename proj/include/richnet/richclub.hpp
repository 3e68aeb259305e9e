#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "richnet/centrality.hpp"
#include "richnet/graph.hpp"

namespace richnet {

/// Disjoint clusters covering the high-centrality set, each a high-centrality
/// vertex neighborhood merged with every overlapping one. Ordered by
/// contained-high-centrality count descending.
struct ClusterSet {
    std::vector<std::vector<VertexId>> clusters;  // sorted vertex lists
    std::vector<std::size_t> hc_per_cluster;      // H_i, parallel to clusters
    std::size_t hc_total = 0;                     // H
};

/// Starts one cluster per high-centrality vertex ({v} + neighbors) and
/// merges any two clusters sharing a vertex until none overlap. The result
/// is the connected components of the overlap relation, so merge order
/// cannot change it. Ties in H_i break by smallest member index.
ClusterSet build_clusters(const Graph& g, const HighCentralitySet& hc);

struct ScatterednessReport {
    std::vector<double> ratios;   // R_i
    double value = 1.0;           // geometric mean of the ratios
    std::size_t cluster_count = 0;
};

/// R_i = H_i / (H - sum of earlier H_j); value = (prod R_i)^(1/K), computed
/// in log space. A single cluster gives exactly 1. Throws if any count is 0.
ScatterednessReport scatteredness_from_counts(std::span<const std::size_t> hc_counts);

ScatterednessReport scatteredness(const ClusterSet& cs);

}  // namespace richnet
