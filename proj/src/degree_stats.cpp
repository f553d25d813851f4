#include "lodcloud/degree_stats.hpp"

#include <cmath>

#include "lodcloud/errors.hpp"

namespace lodcloud {

EdgeEndpointVectors endpoint_vectors(const DirectedGraph& graph,
                                     Direction direction,
                                     EdgeOrientation orientation) {
    if (graph.edge_count() == 0)
        throw EmptyEdgeSetError("endpoint vectors need at least one edge");

    EdgeEndpointVectors vectors;
    const size_t pairs = graph.edges().size() *
                         (orientation == EdgeOrientation::symmetrized ? 2 : 1);
    vectors.tail_degrees.reserve(pairs);
    vectors.head_degrees.reserve(pairs);
    for (const auto& [u, v] : graph.edges()) {
        vectors.tail_degrees.push_back(graph.degree(u, direction));
        vectors.head_degrees.push_back(graph.degree(v, direction));
    }
    if (orientation == EdgeOrientation::symmetrized) {
        for (const auto& [u, v] : graph.edges()) {
            vectors.tail_degrees.push_back(graph.degree(v, direction));
            vectors.head_degrees.push_back(graph.degree(u, direction));
        }
    }
    return vectors;
}

CorrelationResult assortativity(const DirectedGraph& graph,
                                Direction direction,
                                CorrelationMethod method,
                                EdgeOrientation orientation) {
    if (graph.edge_count() < 3)
        throw TooFewSamplesError("assortativity needs at least 3 edges, got " +
                                 std::to_string(graph.edge_count()));
    EdgeEndpointVectors vectors = endpoint_vectors(graph, direction, orientation);
    return correlate(vectors.tail_degrees, vectors.head_degrees, method);
}

DegreeHistogram degree_histogram(const DirectedGraph& graph, Direction direction) {
    DegreeHistogram histogram;
    histogram.direction = direction;
    for (int v = 0; v < graph.vertex_count(); ++v)
        ++histogram.entries[graph.degree(v, direction)];
    return histogram;
}

std::vector<std::pair<double, double>> log_log_points(const DegreeHistogram& histogram) {
    std::vector<std::pair<double, double>> points;
    points.reserve(histogram.entries.size());
    for (const auto& [degree, count] : histogram.entries) {
        if (degree <= 0)
            continue;
        points.emplace_back(std::log(static_cast<double>(degree)),
                            std::log(static_cast<double>(count)));
    }
    return points;
}

} // namespace lodcloud
