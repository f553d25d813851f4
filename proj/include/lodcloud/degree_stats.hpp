#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lodcloud/correlation.hpp"
#include "lodcloud/graph.hpp"

namespace lodcloud {

enum class EdgeOrientation { directed, symmetrized };

// Per-edge degree pairs: tail_degrees[i] and head_degrees[i] are the chosen
// degrees of edge i's endpoints. The symmetrized orientation appends every
// edge a second time with tail and head swapped.
struct EdgeEndpointVectors {
    std::vector<double> tail_degrees;
    std::vector<double> head_degrees;
};

EdgeEndpointVectors endpoint_vectors(const DirectedGraph& graph,
                                     Direction direction,
                                     EdgeOrientation orientation);

CorrelationResult assortativity(const DirectedGraph& graph,
                                Direction direction,
                                CorrelationMethod method,
                                EdgeOrientation orientation = EdgeOrientation::directed);

struct DegreeHistogram {
    std::map<int, int> entries;
    Direction direction = Direction::total;
};

DegreeHistogram degree_histogram(const DirectedGraph& graph, Direction direction);

// (log degree, log frequency) pairs; zero-degree entries are omitted.
std::vector<std::pair<double, double>> log_log_points(const DegreeHistogram& histogram);

} // namespace lodcloud
