#include "richnet/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <thread>

#include "richnet/format.hpp"

namespace richnet {

namespace {

// Per-thread buffers reused across sources.
struct BrandesWorkspace {
    std::vector<Distance> dist;
    std::vector<double> sigma;       // shortest-path counts from the source
    std::vector<double> acc;         // dependency (per_pair) or downstream path count (literal)
    std::vector<std::vector<VertexId>> preds;
    std::vector<VertexId> order;     // vertices in BFS order

    explicit BrandesWorkspace(VertexId n)
        : dist(n), sigma(n), acc(n), preds(n) {
        order.reserve(n);
    }
};

// Runs one source of Brandes' algorithm, adding this source's contribution
// into `bc`. For paper_literal the contribution is sigma_sv * (number of
// DAG descendants' path count), i.e. the raw count of shortest s-t paths
// through v; `pair_paths` accumulates sigma_st over reachable t for the
// denominator.
void accumulate_source(const Graph& g, VertexId s, BetweennessVariant variant,
                       std::vector<double>& bc, double& pair_paths,
                       BrandesWorkspace& ws) {
    const VertexId n = g.vertex_count();
    std::fill(ws.dist.begin(), ws.dist.end(), Graph::kUnreachable);
    std::fill(ws.sigma.begin(), ws.sigma.end(), 0.0);
    std::fill(ws.acc.begin(), ws.acc.end(), 0.0);
    for (auto& p : ws.preds) p.clear();
    ws.order.clear();

    ws.dist[s] = 0;
    ws.sigma[s] = 1.0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        ws.order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
            if (ws.dist[w] == Graph::kUnreachable) {
                ws.dist[w] = ws.dist[v] + 1;
                queue.push(w);
            }
            if (ws.dist[w] == ws.dist[v] + 1) {
                ws.sigma[w] += ws.sigma[v];
                ws.preds[w].push_back(v);
            }
        }
    }

    if (variant == BetweennessVariant::paper_literal) {
        for (std::size_t i = 1; i < ws.order.size(); ++i) pair_paths += ws.sigma[ws.order[i]];
    }

    // farthest-first over the BFS DAG
    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        VertexId w = *it;
        for (VertexId v : ws.preds[w]) {
            if (variant == BetweennessVariant::per_pair)
                ws.acc[v] += ws.sigma[v] / ws.sigma[w] * (1.0 + ws.acc[w]);
            else
                ws.acc[v] += 1.0 + ws.acc[w];
        }
        if (w != s) {
            bc[w] += variant == BetweennessVariant::per_pair ? ws.acc[w]
                                                             : ws.sigma[w] * ws.acc[w];
        }
    }
    (void)n;
}

// Splits sources into `threads` contiguous stripes and combines per-stripe
// partial sums in stripe order, keeping results deterministic per thread
// count (and within 1e-9 of the serial order).
template <typename PerSource>
void run_striped(VertexId n, unsigned threads, PerSource per_source) {
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2 * threads) {
        per_source(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    const VertexId chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        VertexId lo = std::min<VertexId>(n, t * chunk);
        VertexId hi = std::min<VertexId>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([=] { per_source(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

CentralityScores closeness_all(const Graph& g, unsigned threads) {
    const VertexId n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("degenerate graph: closeness needs n >= 2");
    std::vector<double> scores(n, 0.0);

    run_striped(n, threads, [&](unsigned, VertexId lo, VertexId hi) {
        for (VertexId v = lo; v < hi; ++v) {
            auto dist = g.bfs_distances(v);
            double sum = 0.0;
            for (VertexId s = 0; s < n; ++s) {
                if (s != v && dist[s] != Graph::kUnreachable)
                    sum += 1.0 / static_cast<double>(dist[s]);
            }
            scores[v] = sum / static_cast<double>(n - 1);
        }
    });
    return CentralityScores{CentralityKind::closeness, std::move(scores)};
}

CentralityScores betweenness_all(const Graph& g, BetweennessVariant variant, unsigned threads) {
    const VertexId n = g.vertex_count();
    std::vector<double> scores(n, 0.0);
    if (n == 0) return CentralityScores{CentralityKind::betweenness, std::move(scores)};

    threads = std::max(1u, threads);
    const unsigned stripes = (threads == 1 || n < 2 * threads) ? 1 : threads;
    std::vector<std::vector<double>> partial(stripes, std::vector<double>(n, 0.0));
    std::vector<double> partial_paths(stripes, 0.0);

    run_striped(n, threads, [&](unsigned stripe, VertexId lo, VertexId hi) {
        BrandesWorkspace ws(n);
        for (VertexId s = lo; s < hi; ++s)
            accumulate_source(g, s, variant, partial[stripe], partial_paths[stripe], ws);
    });

    double total_paths = 0.0;
    for (unsigned i = 0; i < stripes; ++i) {
        total_paths += partial_paths[i];
        for (VertexId v = 0; v < n; ++v) scores[v] += partial[i][v];
    }

    if (variant == BetweennessVariant::per_pair) {
        for (double& x : scores) x /= 2.0;  // each unordered pair seen from both ends
    } else {
        if (total_paths > 0.0) {
            for (double& x : scores) x /= total_paths;
        }
    }
    return CentralityScores{CentralityKind::betweenness, std::move(scores)};
}

RankedSet top_k(const CentralityScores& scores, std::size_t k) {
    if (k == 0) throw std::invalid_argument("top_k: k must be >= 1");
    const std::size_t n = scores.scores.size();
    std::vector<VertexId> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](VertexId a, VertexId b) {
        if (scores.scores[a] != scores.scores[b]) return scores.scores[a] > scores.scores[b];
        return a < b;
    });
    RankedSet result;
    result.k = k;
    result.members.assign(idx.begin(), idx.begin() + std::min(k, n));
    return result;
}

HighCentralitySet ground_truth(const Graph& g, std::size_t k, BetweennessVariant variant,
                               unsigned threads) {
    if (k == 0) throw std::invalid_argument("ground_truth: k must be >= 1");
    RankedSet bc = top_k(betweenness_all(g, variant, threads), k);
    RankedSet cc = top_k(closeness_all(g, threads), k);

    std::vector<VertexId> bc_sorted = bc.members;
    std::vector<VertexId> cc_sorted = cc.members;
    std::sort(bc_sorted.begin(), bc_sorted.end());
    std::sort(cc_sorted.begin(), cc_sorted.end());

    HighCentralitySet result;
    std::size_t i = 0, j = 0;
    while (i < bc_sorted.size() || j < cc_sorted.size()) {
        if (j == cc_sorted.size() || (i < bc_sorted.size() && bc_sorted[i] < cc_sorted[j])) {
            result.vertices.push_back(bc_sorted[i++]);
            result.tags.push_back(HighCentralityTag::bc);
        } else if (i == bc_sorted.size() || cc_sorted[j] < bc_sorted[i]) {
            result.vertices.push_back(cc_sorted[j++]);
            result.tags.push_back(HighCentralityTag::cc);
        } else {
            result.vertices.push_back(bc_sorted[i]);
            result.tags.push_back(HighCentralityTag::both);
            ++i;
            ++j;
        }
    }
    return result;
}

void write_scores_csv(std::ostream& out, const Graph& g, const CentralityScores& scores) {
    RankedSet all = top_k(scores, scores.scores.size());
    out << "vertex_label,score\n";
    for (VertexId v : all.members)
        out << g.label(v) << ',' << format_double(scores.scores[v]) << '\n';
}

const char* to_string(CentralityKind kind) {
    return kind == CentralityKind::closeness ? "closeness" : "betweenness";
}

const char* to_string(BetweennessVariant variant) {
    return variant == BetweennessVariant::per_pair ? "per_pair" : "paper_literal";
}

}  // namespace richnet
