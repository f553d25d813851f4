#pragma once

#include <vector>

#include "lodcloud/graph.hpp"

namespace lodcloud {

struct ComponentDecomposition {
    // vertex index -> component id; ids are contiguous from 0 and ordered by
    // the lowest vertex index appearing in each component.
    std::vector<int> assignment;
    // Component sizes in descending order.
    std::vector<int> sizes;

    int component_count() const { return static_cast<int>(sizes.size()); }
};

ComponentDecomposition strongly_connected_components(const DirectedGraph& graph);

ComponentDecomposition weakly_connected_components(const DirectedGraph& graph);

bool is_weakly_connected(const DirectedGraph& graph);

} // namespace lodcloud
