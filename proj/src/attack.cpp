#include "richnet/attack.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "richnet/cores.hpp"

namespace richnet {

double jaccard(std::span<const VertexId> a, std::span<const VertexId> b) {
    if (a.empty() && b.empty()) throw std::invalid_argument("jaccard of two empty sets");
    std::size_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<double>(common) /
           static_cast<double>(a.size() + b.size() - common);
}

std::vector<Edge> candidate_edges(const Graph& g, std::span<const VertexId> sample,
                                  AttackCriterion criterion) {
    if (sample.empty()) throw std::invalid_argument("empty sample");
    std::vector<VertexId> to_parent;
    Graph induced = g.induced_subgraph(sample, &to_parent);
    if (induced.edge_count() == 0) return {};

    CoreDecomposition cores = core_decompose(induced);
    std::vector<bool> high(induced.vertex_count(), false);
    for (VertexId v : high_core_vertices(cores)) high[v] = true;

    std::vector<Edge> result;
    for (const Edge& e : induced.edges()) {
        bool keep = criterion == AttackCriterion::one ? (high[e.u] || high[e.v])
                                                      : (high[e.u] && high[e.v]);
        if (keep) result.push_back(make_edge(to_parent[e.u], to_parent[e.v]));
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

std::vector<VertexId> sorted_members(const RankedSet& ranked) {
    std::vector<VertexId> members = ranked.members;
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

AttackReport run_attack(const Graph& g, const AttackConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("trials must be >= 1");
    for (std::size_t i = 0; i < cfg.percentages.size(); ++i) {
        double p = cfg.percentages[i];
        if (p < 0.0 || p >= 1.0) throw std::invalid_argument("percentages must lie in [0, 1)");
        if (i > 0 && p <= cfg.percentages[i - 1])
            throw std::invalid_argument("percentages must be strictly increasing");
    }

    const std::size_t m = g.edge_count();
    const VertexId n = g.vertex_count();
    const auto target = static_cast<std::size_t>(
        std::ceil(cfg.sample_fraction * static_cast<double>(n)));

    std::vector<VertexId> base_bc =
        sorted_members(top_k(betweenness_all(g, cfg.betweenness_variant, cfg.threads), cfg.k));
    std::vector<VertexId> base_cc =
        sorted_members(top_k(closeness_all(g, cfg.threads), cfg.k));

    AttackReport report;
    report.config = cfg;
    report.original_edge_count = m;

    for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = Rng::stream(cfg.rng_seed, trial);

        AttackTrial record;
        record.trial = trial;
        record.seed = pick_seed(g, cfg.seed_strategy, rng, {});
        std::vector<VertexId> sample = snowball_sample(g, record.seed, target, rng);

        // The removal sequence: shuffled candidates of the active criterion,
        // extended with the remaining criterion-one edges when criterion two
        // runs dry. Cumulative levels are prefixes of this one sequence.
        std::vector<Edge> sequence = candidate_edges(g, sample, cfg.criterion);
        rng.shuffle(sequence);
        std::size_t primary_count = sequence.size();
        if (cfg.criterion == AttackCriterion::two) {
            std::vector<Edge> wider = candidate_edges(g, sample, AttackCriterion::one);
            std::vector<Edge> primary_sorted(sequence.begin(), sequence.end());
            std::sort(primary_sorted.begin(), primary_sorted.end());
            std::vector<Edge> extension;
            for (const Edge& e : wider) {
                if (!std::binary_search(primary_sorted.begin(), primary_sorted.end(), e))
                    extension.push_back(e);
            }
            rng.shuffle(extension);
            sequence.insert(sequence.end(), extension.begin(), extension.end());
        }

        Graph perturbed = g;
        std::size_t removed_so_far = 0;
        for (double pct : cfg.percentages) {
            const auto quota =
                static_cast<std::size_t>(std::floor(pct * static_cast<double>(m)));
            const std::size_t take = std::min(quota, sequence.size());
            if (take > removed_so_far) {
                std::span<const Edge> extra(sequence.data() + removed_so_far,
                                            take - removed_so_far);
                perturbed = perturbed.without_edges(extra);
                if (take > primary_count) record.fallback_used = true;
                removed_so_far = take;
            }

            std::vector<VertexId> bc = sorted_members(
                top_k(betweenness_all(perturbed, cfg.betweenness_variant, cfg.threads), cfg.k));
            std::vector<VertexId> cc =
                sorted_members(top_k(closeness_all(perturbed, cfg.threads), cfg.k));

            const bool exhausted = quota > sequence.size();
            record.cells.push_back({pct, CentralityKind::betweenness, jaccard(base_bc, bc),
                                    removed_so_far, exhausted});
            record.cells.push_back({pct, CentralityKind::closeness, jaccard(base_cc, cc),
                                    removed_so_far, exhausted});
        }
        report.trials.push_back(std::move(record));
    }

    for (double pct : cfg.percentages) {
        for (CentralityKind kind : {CentralityKind::betweenness, CentralityKind::closeness}) {
            double sum = 0.0;
            std::size_t count = 0;
            for (const AttackTrial& t : report.trials) {
                for (const AttackCell& c : t.cells) {
                    if (c.percentage == pct && c.kind == kind) {
                        sum += c.jaccard;
                        ++count;
                    }
                }
            }
            double mean = sum / static_cast<double>(count);
            double var = 0.0;
            for (const AttackTrial& t : report.trials) {
                for (const AttackCell& c : t.cells) {
                    if (c.percentage == pct && c.kind == kind)
                        var += (c.jaccard - mean) * (c.jaccard - mean);
                }
            }
            report.aggregates.push_back(
                {pct, kind, mean, std::sqrt(var / static_cast<double>(count))});
        }
    }
    return report;
}

}  // namespace richnet
