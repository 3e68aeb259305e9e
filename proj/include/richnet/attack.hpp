#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "richnet/centrality.hpp"
#include "richnet/graph.hpp"
#include "richnet/sampler.hpp"

namespace richnet {

enum class AttackCriterion { one, two };

struct AttackConfig {
    AttackCriterion criterion = AttackCriterion::two;
    std::vector<double> percentages{0.02, 0.04, 0.06, 0.08};  // of the original edge count
    std::uint32_t trials = 5;
    SeedStrategy seed_strategy = SeedStrategy::hd_hcc;
    double sample_fraction = 0.10;
    std::uint64_t rng_seed = 0;
    std::size_t k = 20;
    BetweennessVariant betweenness_variant = BetweennessVariant::per_pair;
    unsigned threads = 1;
};

/// Jaccard index |a & b| / |a | b| of two vertex sets (given sorted).
/// Throws when both sets are empty.
double jaccard(std::span<const VertexId> a, std::span<const VertexId> b);

/// Edges of the subgraph induced on `sample` whose endpoints are high-core
/// vertices of that induced subgraph: at least one endpoint under criterion
/// one, both under criterion two. Returned as parent-graph (min,max) pairs,
/// sorted.
std::vector<Edge> candidate_edges(const Graph& g, std::span<const VertexId> sample,
                                  AttackCriterion criterion);

struct AttackCell {
    double percentage = 0.0;
    CentralityKind kind;
    double jaccard = 1.0;
    std::size_t edges_removed = 0;
    bool exhausted = false;  // candidate list ran out before the quota
};

struct AttackTrial {
    std::uint32_t trial = 0;
    VertexId seed = 0;
    bool fallback_used = false;  // criterion two extended with criterion-one edges
    std::vector<AttackCell> cells;
};

struct AttackAggregate {
    double percentage = 0.0;
    CentralityKind kind;
    double mean = 1.0;
    double stddev = 0.0;
};

struct AttackReport {
    AttackConfig config;
    std::size_t original_edge_count = 0;
    std::vector<AttackTrial> trials;
    std::vector<AttackAggregate> aggregates;  // per (percentage, kind), trial-averaged
};

/// Per trial: snowball-sample ~sample_fraction of the vertices, build the
/// criterion's candidate list from the sample, shuffle it, then remove
/// growing prefixes of it at each percentage of the original edge count
/// (cumulative within the trial). Criterion two falls back to the remaining
/// criterion-one edges when its candidates run out; criterion one stops and
/// flags exhaustion. After each level the top-k betweenness and closeness
/// sets of the perturbed graph are compared to the original ones.
AttackReport run_attack(const Graph& g, const AttackConfig& cfg);

}  // namespace richnet
