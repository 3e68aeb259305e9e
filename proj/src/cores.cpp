#include "richnet/cores.hpp"

#include <algorithm>
#include <stdexcept>

namespace richnet {

CoreDecomposition core_decompose(const Graph& g) {
    const VertexId n = g.vertex_count();
    CoreDecomposition result;
    result.core_number.assign(n, 0);
    if (n == 0) return result;

    // Batagelj-Zaversnik peeling: vertices bin-sorted by remaining degree,
    // processed smallest-first; each processed vertex decrements the
    // remaining degree of its higher-degree neighbors in place.
    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    std::vector<std::uint32_t> bin(max_deg + 2, 0);
    for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
    std::uint32_t start = 0;
    for (std::uint32_t d = 0; d <= max_deg; ++d) {
        std::uint32_t count = bin[d];
        bin[d] = start;
        start += count;
    }

    std::vector<VertexId> order(n);
    std::vector<std::uint32_t> pos(n);
    for (VertexId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        order[pos[v]] = v;
    }
    for (std::uint32_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (VertexId i = 0; i < n; ++i) {
        VertexId v = order[i];
        result.core_number[v] = deg[v];
        for (VertexId u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                // swap u with the first vertex of its bin, then shrink the bin
                std::uint32_t du = deg[u];
                VertexId w = order[bin[du]];
                if (u != w) {
                    std::swap(order[pos[u]], order[bin[du]]);
                    std::swap(pos[u], pos[w]);
                }
                ++bin[du];
                --deg[u];
            }
        }
    }

    result.delta_max = *std::max_element(result.core_number.begin(), result.core_number.end());
    return result;
}

std::vector<VertexId> high_core_vertices(const CoreDecomposition& d) {
    if (d.core_number.empty()) throw std::invalid_argument("empty graph");
    const std::uint32_t threshold = std::max<std::uint32_t>(1, d.delta_max > 0 ? d.delta_max - 1 : 1);
    std::vector<VertexId> result;
    for (VertexId v = 0; v < d.core_number.size(); ++v) {
        if (d.core_number[v] >= threshold) result.push_back(v);
    }
    return result;
}

void write_core_histogram_csv(std::ostream& out, const CoreDecomposition& d) {
    std::vector<std::size_t> counts(d.delta_max + 1, 0);
    for (std::uint32_t c : d.core_number) ++counts[c];
    out << "core_number,count\n";
    for (std::uint32_t c = 0; c <= d.delta_max; ++c) {
        if (counts[c] > 0) out << c << ',' << counts[c] << '\n';
    }
}

}  // namespace richnet
