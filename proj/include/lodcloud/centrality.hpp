#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lodcloud/correlation.hpp"
#include "lodcloud/graph.hpp"

namespace lodcloud {

enum class DanglingPolicy {
    // Dangling rank mass is spread uniformly inside the damped term.
    uniform,
    // Dangling outflow is dropped and the vector renormalized to sum 1, so
    // dangling mass leaves through the teleport term only.
    teleport_only,
};

struct PageRankVector {
    std::vector<double> scores; // indexed by vertex, sums to 1
    double damping = 0.85;
    int iterations_used = 0;
    double residual = 0.0;
};

PageRankVector pagerank(const DirectedGraph& graph, double damping = 0.85,
                        double tolerance = 1e-12, int max_iterations = 200,
                        DanglingPolicy policy = DanglingPolicy::uniform);

// Top k vertices by score, descending; ties resolved by vertex id ascending.
std::vector<std::pair<std::string, double>>
top_k_central(const DirectedGraph& graph, const PageRankVector& ranks, int k);

// Correlates scores against the attribute over the vertices where the
// attribute is present.
CorrelationResult centrality_attribute_correlation(
    const PageRankVector& ranks,
    const std::vector<std::optional<double>>& attribute,
    CorrelationMethod method);

// Edge-endpoint correlation of a vertex attribute over the subgraph induced
// on attribute-bearing vertices.
CorrelationResult attribute_assortativity(
    const DirectedGraph& graph,
    const std::vector<std::optional<double>>& attribute,
    CorrelationMethod method);

} // namespace lodcloud
