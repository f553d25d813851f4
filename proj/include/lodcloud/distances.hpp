#pragma once

#include "lodcloud/graph.hpp"

namespace lodcloud {

struct DistanceSummary {
    int diameter = 0;
    double average_path_length = 0.0;
    long long pair_count = 0;
};

// Diameter and mean shortest-path length over all unordered vertex pairs,
// by breadth-first search from every vertex. Throws DisconnectedGraphError
// when any pair is unreachable.
DistanceSummary distance_summary(const UndirectedView& view);

// Sensitivity variant: directed hop counts averaged over the ordered pairs
// (u, v), u != v, where v is reachable from u. Unreachable pairs are simply
// excluded, so this never throws on disconnected input.
DistanceSummary directed_distance_summary(const DirectedGraph& graph);

} // namespace lodcloud
