#include "lodcloud/distances.hpp"

#include <algorithm>
#include <queue>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

// BFS hop counts from `source`; -1 marks unreachable vertices.
template <typename Neighbors>
std::vector<int> bfs_distances(int n, int source, Neighbors&& neighbors) {
    std::vector<int> dist(n, -1);
    dist[source] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

} // namespace

DistanceSummary distance_summary(const UndirectedView& view) {
    const int n = view.vertex_count();
    if (n == 0)
        throw EmptyGraphError("distance summary is undefined on an empty graph");

    DistanceSummary summary;
    long long total = 0;
    for (int source = 0; source < n; ++source) {
        auto dist = bfs_distances(n, source,
                                  [&](int v) -> const std::vector<int>& {
                                      return view.neighbors(v);
                                  });
        // Unordered pairs: only count targets above the source.
        for (int target = source + 1; target < n; ++target) {
            if (dist[target] < 0)
                throw DisconnectedGraphError(
                    "no path between '" + view.base().vertex_name(source) +
                    "' and '" + view.base().vertex_name(target) + "'");
            total += dist[target];
            summary.diameter = std::max(summary.diameter, dist[target]);
            ++summary.pair_count;
        }
    }
    if (summary.pair_count > 0)
        summary.average_path_length =
            static_cast<double>(total) / static_cast<double>(summary.pair_count);
    return summary;
}

DistanceSummary directed_distance_summary(const DirectedGraph& graph) {
    const int n = graph.vertex_count();
    if (n == 0)
        throw EmptyGraphError("distance summary is undefined on an empty graph");

    DistanceSummary summary;
    long long total = 0;
    for (int source = 0; source < n; ++source) {
        auto dist = bfs_distances(n, source,
                                  [&](int v) -> const std::vector<int>& {
                                      return graph.out_neighbors(v);
                                  });
        for (int target = 0; target < n; ++target) {
            if (target == source || dist[target] < 0)
                continue;
            total += dist[target];
            summary.diameter = std::max(summary.diameter, dist[target]);
            ++summary.pair_count;
        }
    }
    if (summary.pair_count > 0)
        summary.average_path_length =
            static_cast<double>(total) / static_cast<double>(summary.pair_count);
    return summary;
}

} // namespace lodcloud
