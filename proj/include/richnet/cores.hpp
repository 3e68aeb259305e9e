#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "richnet/graph.hpp"

namespace richnet {

struct CoreDecomposition {
    std::vector<std::uint32_t> core_number;
    std::uint32_t delta_max = 0;
};

/// Exact core numbers by bucket peeling, linear in the edge count.
CoreDecomposition core_decompose(const Graph& g);

/// Vertices of the innermost and second-innermost cores:
/// {v : core_number[v] >= delta_max - 1}, with a floor of core >= 1 so the
/// delta_max = 1 case never picks up isolated vertices. Sorted ascending.
std::vector<VertexId> high_core_vertices(const CoreDecomposition& d);

/// CSV `core_number,count`, ascending.
void write_core_histogram_csv(std::ostream& out, const CoreDecomposition& d);

}  // namespace richnet
