#include "richnet/richclub.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace richnet {

namespace {

// Union-find over cluster indices.
struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ClusterSet build_clusters(const Graph& g, const HighCentralitySet& hc) {
    if (hc.vertices.empty()) throw std::invalid_argument("empty high-centrality set");

    const std::size_t k = hc.vertices.size();
    DisjointSets dsu(k);

    // Two initial clusters overlap iff some vertex lies in both; group the
    // seed clusters by every vertex they contain. Merging unions of sets
    // never creates a new overlap, so one pass reaches the fixpoint.
    std::unordered_map<VertexId, std::size_t> first_owner;
    auto claim = [&](VertexId v, std::size_t cluster) {
        auto [it, inserted] = first_owner.try_emplace(v, cluster);
        if (!inserted) dsu.unite(cluster, it->second);
    };
    for (std::size_t i = 0; i < k; ++i) {
        VertexId center = hc.vertices[i];
        claim(center, i);
        for (VertexId w : g.neighbors(center)) claim(w, i);
    }

    std::unordered_map<std::size_t, std::size_t> root_to_cluster;
    std::vector<std::vector<VertexId>> members;
    std::vector<std::size_t> hc_counts;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t root = dsu.find(i);
        auto [it, inserted] = root_to_cluster.try_emplace(root, members.size());
        if (inserted) {
            members.emplace_back();
            hc_counts.push_back(0);
        }
        ++hc_counts[it->second];
    }
    for (const auto& [vertex, owner] : first_owner)
        members[root_to_cluster.at(dsu.find(owner))].push_back(vertex);

    for (auto& m : members) std::sort(m.begin(), m.end());

    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (hc_counts[a] != hc_counts[b]) return hc_counts[a] > hc_counts[b];
        return members[a].front() < members[b].front();
    });

    ClusterSet result;
    result.hc_total = k;
    for (std::size_t i : order) {
        result.clusters.push_back(std::move(members[i]));
        result.hc_per_cluster.push_back(hc_counts[i]);
    }
    return result;
}

namespace {

ScatterednessReport scatteredness_impl(std::span<const std::size_t> hc_counts) {
    if (hc_counts.empty()) throw std::invalid_argument("no clusters");
    std::size_t total = 0;
    for (std::size_t h : hc_counts) {
        if (h == 0) throw std::invalid_argument("cluster without high-centrality vertices");
        total += h;
    }

    ScatterednessReport report;
    report.cluster_count = hc_counts.size();
    std::size_t unseen = total;
    double log_sum = 0.0;
    for (std::size_t h : hc_counts) {
        double ratio = static_cast<double>(h) / static_cast<double>(unseen);
        report.ratios.push_back(ratio);
        log_sum += std::log(ratio);
        unseen -= h;
    }
    report.value = hc_counts.size() == 1
                       ? 1.0
                       : std::exp(log_sum / static_cast<double>(hc_counts.size()));
    return report;
}

}  // namespace

ScatterednessReport scatteredness_from_counts(std::span<const std::size_t> hc_counts) {
    return scatteredness_impl(hc_counts);
}

ScatterednessReport scatteredness(const ClusterSet& cs) {
    if (!std::is_sorted(cs.hc_per_cluster.begin(), cs.hc_per_cluster.end(),
                        std::greater<>()))
        throw std::invalid_argument("clusters must be ordered by H_i descending");
    return scatteredness_impl(cs.hc_per_cluster);
}

}  // namespace richnet
