#include "richnet/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "richnet/cores.hpp"

namespace richnet {

namespace {

// Frontier candidates bucketed by gain, with exact membership so the set of
// current maxima is available for uniform tie-breaking. All updates are
// O(1); gains of resident vertices only ever decrease.
class GainQueue {
public:
    explicit GainQueue(VertexId n)
        : gain_(n, 0), pos_(n, 0), resident_(n, false) {}

    bool contains(VertexId v) const { return resident_[v]; }
    bool empty() const { return size_ == 0; }
    std::uint32_t gain(VertexId v) const { return gain_[v]; }

    void insert(VertexId v, std::uint32_t gain) {
        if (gain >= buckets_.size()) buckets_.resize(gain + 1);
        gain_[v] = gain;
        pos_[v] = static_cast<std::uint32_t>(buckets_[gain].size());
        buckets_[gain].push_back(v);
        resident_[v] = true;
        max_gain_ = std::max<std::size_t>(max_gain_, gain);
        ++size_;
    }

    void decrement(VertexId v) {
        std::uint32_t old_gain = gain_[v];
        remove_from_bucket(v);
        gain_[v] = old_gain - 1;
        pos_[v] = static_cast<std::uint32_t>(buckets_[old_gain - 1].size());
        buckets_[old_gain - 1].push_back(v);
    }

    /// Removes and returns a uniformly random vertex of maximum gain.
    VertexId pop_random_max(Rng& rng) {
        while (buckets_[max_gain_].empty()) --max_gain_;
        auto& bucket = buckets_[max_gain_];
        std::size_t i = rng.below(bucket.size());
        VertexId v = bucket[i];
        std::swap(bucket[i], bucket.back());
        pos_[bucket[i]] = static_cast<std::uint32_t>(i);
        bucket.pop_back();
        resident_[v] = false;
        --size_;
        return v;
    }

    void erase(VertexId v) {
        remove_from_bucket(v);
        resident_[v] = false;
        --size_;
    }

private:
    void remove_from_bucket(VertexId v) {
        auto& bucket = buckets_[gain_[v]];
        std::uint32_t i = pos_[v];
        bucket[i] = bucket.back();
        pos_[bucket[i]] = i;
        bucket.pop_back();
    }

    std::vector<std::vector<VertexId>> buckets_;
    std::vector<std::uint32_t> gain_;
    std::vector<std::uint32_t> pos_;
    std::vector<bool> resident_;
    std::size_t size_ = 0;
    std::size_t max_gain_ = 0;
};

}  // namespace

std::vector<VertexId> snowball_sample(const Graph& g, VertexId seed, std::size_t target_size,
                                      Rng& rng) {
    const VertexId n = g.vertex_count();
    if (seed >= n) throw std::out_of_range("seed out of range");
    if (target_size == 0) throw std::invalid_argument("target_size must be >= 1");

    std::vector<bool> in_sample(n, false);
    std::vector<bool> covered(n, false);  // sample plus its frontier
    std::vector<VertexId> sample;
    sample.reserve(std::min<std::size_t>(target_size, n));
    GainQueue frontier(n);

    auto add_to_sample = [&](VertexId v) {
        if (frontier.contains(v)) frontier.erase(v);
        in_sample[v] = true;
        covered[v] = true;
        sample.push_back(v);

        // Neighbors of v not yet covered become frontier vertices. Mark
        // them covered first: existing frontier members counted them in
        // their gains and must be decremented exactly once each.
        std::vector<VertexId> newly;
        for (VertexId w : g.neighbors(v)) {
            if (!covered[w]) {
                covered[w] = true;
                newly.push_back(w);
            }
        }
        for (VertexId w : newly) {
            for (VertexId u : g.neighbors(w)) {
                if (frontier.contains(u)) frontier.decrement(u);
            }
        }
        for (VertexId w : newly) {
            std::uint32_t gain = 0;
            for (VertexId x : g.neighbors(w)) {
                if (!covered[x]) ++gain;
            }
            frontier.insert(w, gain);
        }
    };

    add_to_sample(seed);
    while (sample.size() < target_size) {
        if (!frontier.empty()) {
            add_to_sample(frontier.pop_random_max(rng));
            continue;
        }
        // component exhausted: restart from a random unsampled vertex
        std::size_t remaining = n - sample.size();
        if (remaining == 0) break;
        std::size_t skip = rng.below(remaining);
        VertexId restart = 0;
        for (VertexId v = 0;; ++v) {
            if (!in_sample[v] && skip-- == 0) {
                restart = v;
                break;
            }
        }
        add_to_sample(restart);
    }
    return sample;
}

double expansion_ratio(const Graph& g, std::span<const VertexId> sample) {
    if (sample.empty()) throw std::invalid_argument("empty sample");
    std::vector<bool> inside(g.vertex_count(), false);
    for (VertexId v : sample) inside[v] = true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t outside_neighbors = 0;
    for (VertexId v : sample) {
        for (VertexId w : g.neighbors(v)) {
            if (!inside[w] && !seen[w]) {
                seen[w] = true;
                ++outside_neighbors;
            }
        }
    }
    return static_cast<double>(outside_neighbors) / static_cast<double>(sample.size());
}

VertexId pick_seed(const Graph& g, SeedStrategy strategy, Rng& rng,
                   const std::vector<bool>& exclude) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> allowed;
    allowed.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        if (exclude.empty() || !exclude[v]) allowed.push_back(v);
    }
    if (allowed.empty()) throw std::invalid_argument("all vertices excluded");

    if (strategy == SeedStrategy::random) return allowed[rng.below(allowed.size())];

    // top decile by degree, then maximize degree * clustering coefficient
    std::sort(allowed.begin(), allowed.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::size_t decile = (allowed.size() + 9) / 10;
    VertexId best = allowed.front();
    double best_value = -1.0;
    for (std::size_t i = 0; i < decile; ++i) {
        VertexId v = allowed[i];
        double value = static_cast<double>(g.degree(v)) * g.clustering_coefficient(v);
        if (value > best_value || (value == best_value && v < best)) {
            best = v;
            best_value = value;
        }
    }
    return best;
}

PredictionResult predict_high_centrality(const Graph& g, const SamplerConfig& cfg) {
    const VertexId n = g.vertex_count();
    if (n < 10) throw std::invalid_argument("n >= 10 required");
    if (cfg.sample_fraction <= 0.0 || cfg.sample_fraction > 1.0)
        throw std::invalid_argument("sample_fraction must be in (0, 1]");
    if (cfg.max_runs == 0) throw std::invalid_argument("max_runs must be >= 1");

    const auto target = static_cast<std::size_t>(
        std::ceil(cfg.sample_fraction * static_cast<double>(n)));
    Rng rng(cfg.rng_seed);

    std::vector<bool> probable(n, false);
    std::vector<bool> sampled_any(n, false);
    std::size_t sampled_count = 0;
    std::unordered_set<std::uint64_t> union_edges;  // edges of sampled induced subgraphs

    PredictionResult result;
    for (std::uint32_t run = 1; run <= cfg.max_runs; ++run) {
        VertexId seed;
        if (run == 1) {
            seed = pick_seed(g, cfg.seed_strategy, rng, {});
        } else {
            if (sampled_count == n) break;  // nowhere unexplored to seed from
            seed = pick_seed(g, SeedStrategy::random, rng, sampled_any);
        }

        std::vector<VertexId> sample = snowball_sample(g, seed, target, rng);
        for (VertexId v : sample) {
            if (!sampled_any[v]) {
                sampled_any[v] = true;
                ++sampled_count;
            }
        }

        std::vector<VertexId> to_parent;
        Graph induced = g.induced_subgraph(sample, &to_parent);
        CoreDecomposition cores = core_decompose(induced);

        bool grew = false;
        if (cores.delta_max >= 1) {
            for (VertexId v : high_core_vertices(cores)) {
                if (!probable[to_parent[v]]) {
                    probable[to_parent[v]] = true;
                    grew = true;
                }
            }
        }
        for (const Edge& e : induced.edges()) {
            Edge parent = make_edge(to_parent[e.u], to_parent[e.v]);
            union_edges.insert((static_cast<std::uint64_t>(parent.u) << 32) | parent.v);
        }

        result.sampled_subgraphs.push_back(std::move(sample));
        result.runs = run;
        if (run >= 2 && !grew) break;  // probable set unchanged since last run
    }

    // degree within the union of the sampled induced subgraphs
    std::vector<std::uint32_t> union_degree(n, 0);
    for (std::uint64_t key : union_edges) {
        ++union_degree[static_cast<VertexId>(key >> 32)];
        ++union_degree[static_cast<VertexId>(key & 0xffffffffu)];
    }

    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v) {
        if (probable[v]) candidates.push_back(v);
    }
    std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
        if (union_degree[a] != union_degree[b]) return union_degree[a] > union_degree[b];
        return a < b;
    });
    if (candidates.size() > cfg.prediction_size) candidates.resize(cfg.prediction_size);
    std::sort(candidates.begin(), candidates.end());
    result.predicted = std::move(candidates);

    // clusters recovered by sampling: connected components of the union
    // subgraph restricted to probable vertices
    std::vector<VertexId> component(n);
    std::iota(component.begin(), component.end(), 0);
    auto find = [&](VertexId x) {
        while (component[x] != x) x = component[x] = component[component[x]];
        return x;
    };
    for (std::uint64_t key : union_edges) {
        auto u = static_cast<VertexId>(key >> 32);
        auto v = static_cast<VertexId>(key & 0xffffffffu);
        if (probable[u] && probable[v]) component[find(u)] = find(v);
    }
    std::unordered_set<VertexId> roots;
    for (VertexId v = 0; v < n; ++v) {
        if (probable[v]) roots.insert(find(v));
    }
    result.clusters_found = roots.size();
    return result;
}

std::pair<double, double> score_prediction(std::span<const VertexId> predicted,
                                           const HighCentralitySet& truth) {
    if (predicted.empty()) throw std::invalid_argument("empty prediction");
    if (truth.vertices.empty()) throw std::invalid_argument("empty ground truth");
    std::unordered_set<VertexId> truth_set(truth.vertices.begin(), truth.vertices.end());
    std::size_t hits = 0;
    for (VertexId v : predicted) hits += truth_set.count(v);
    return {static_cast<double>(hits) / static_cast<double>(predicted.size()),
            static_cast<double>(hits) / static_cast<double>(truth.vertices.size())};
}

}  // namespace richnet
