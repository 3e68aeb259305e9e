#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "richnet/centrality.hpp"
#include "richnet/graph.hpp"
#include "richnet/rng.hpp"

namespace richnet {

enum class SeedStrategy { random, hd_hcc };

struct SamplerConfig {
    double sample_fraction = 0.10;
    std::uint32_t max_runs = 40;
    SeedStrategy seed_strategy = SeedStrategy::random;
    std::uint64_t rng_seed = 0;
    std::size_t prediction_size = 40;
};

/// Greedy snowball sample grown from `seed`: each step adds the frontier
/// vertex whose neighborhood contributes the most vertices not yet covered
/// by the sample or its frontier, breaking ties uniformly at random. If the
/// frontier empties before `target_size`, growth restarts from a random
/// unsampled vertex. Returns the sample in insertion order.
std::vector<VertexId> snowball_sample(const Graph& g, VertexId seed, std::size_t target_size,
                                      Rng& rng);

/// |N(S)| / |S| for a non-empty vertex set.
double expansion_ratio(const Graph& g, std::span<const VertexId> sample);

/// random: uniform over the non-excluded vertices. hd_hcc: among the top
/// decile by degree of the non-excluded vertices, the one maximizing
/// degree * clustering coefficient (ties by index).
VertexId pick_seed(const Graph& g, SeedStrategy strategy, Rng& rng,
                   const std::vector<bool>& exclude);

struct PredictionResult {
    std::vector<VertexId> predicted;                     // sorted ascending
    std::vector<std::vector<VertexId>> sampled_subgraphs;  // per run, insertion order
    std::uint32_t runs = 0;
    std::size_t clusters_found = 0;
    std::optional<double> precision;  // set once scored against a ground truth
    std::optional<double> recall;
};

/// Repeated snowball sampling; each run's induced subgraph is
/// core-decomposed and its high-core vertices are added to the probable
/// set. Stops early when a run adds nothing new. The prediction is the top
/// `prediction_size` probable vertices by degree within the union of the
/// sampled induced subgraphs.
PredictionResult predict_high_centrality(const Graph& g, const SamplerConfig& cfg);

/// (precision, recall) of a predicted set against the ground truth.
std::pair<double, double> score_prediction(std::span<const VertexId> predicted,
                                           const HighCentralitySet& truth);

}  // namespace richnet
