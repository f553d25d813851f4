#include "lodcloud/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "lodcloud/errors.hpp"

namespace lodcloud {

PageRankVector pagerank(const DirectedGraph& graph, double damping,
                        double tolerance, int max_iterations,
                        DanglingPolicy policy) {
    const int n = graph.vertex_count();
    if (n < 1)
        throw EmptyGraphError("pagerank needs at least one vertex");
    if (!(damping > 0.0) || !(damping < 1.0))
        throw DomainError("damping must lie strictly between 0 and 1");

    PageRankVector result;
    result.damping = damping;
    result.scores.assign(n, 1.0 / n);

    std::vector<double> next(n);
    for (int iteration = 1; iteration <= max_iterations; ++iteration) {
        double dangling_mass = 0.0;
        for (int v = 0; v < n; ++v)
            if (graph.out_neighbors(v).empty())
                dangling_mass += result.scores[v];

        const double teleport = (1.0 - damping) / n;
        const double dangling_share =
            policy == DanglingPolicy::uniform ? damping * dangling_mass / n : 0.0;
        std::fill(next.begin(), next.end(), teleport + dangling_share);
        for (int v = 0; v < n; ++v) {
            const auto& out = graph.out_neighbors(v);
            if (out.empty())
                continue;
            const double share = damping * result.scores[v] / out.size();
            for (int w : out)
                next[w] += share;
        }
        if (policy == DanglingPolicy::teleport_only) {
            double sum = 0.0;
            for (double s : next)
                sum += s;
            for (double& s : next)
                s /= sum;
        }

        double change = 0.0;
        for (int v = 0; v < n; ++v)
            change += std::fabs(next[v] - result.scores[v]);
        result.scores.swap(next);
        result.iterations_used = iteration;
        result.residual = change;
        if (change < tolerance)
            return result;
    }
    throw NoConvergenceError("pagerank did not converge in " +
                             std::to_string(max_iterations) +
                             " iterations; last L1 residual " +
                             std::to_string(result.residual));
}

std::vector<std::pair<std::string, double>>
top_k_central(const DirectedGraph& graph, const PageRankVector& ranks, int k) {
    const int n = graph.vertex_count();
    if (static_cast<int>(ranks.scores.size()) != n)
        throw LengthMismatchError("rank vector does not cover the graph");
    if (k < 1 || k > n)
        throw OutOfRangeError("k must lie in [1, " + std::to_string(n) + "], got " +
                              std::to_string(k));

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ranks.scores[a] != ranks.scores[b])
            return ranks.scores[a] > ranks.scores[b];
        return graph.vertex_name(a) < graph.vertex_name(b);
    });

    std::vector<std::pair<std::string, double>> top;
    top.reserve(k);
    for (int i = 0; i < k; ++i)
        top.emplace_back(graph.vertex_name(order[i]), ranks.scores[order[i]]);
    return top;
}

CorrelationResult centrality_attribute_correlation(
    const PageRankVector& ranks,
    const std::vector<std::optional<double>>& attribute,
    CorrelationMethod method) {
    if (ranks.scores.size() != attribute.size())
        throw LengthMismatchError("attribute map does not cover the graph");

    std::vector<double> scores, values;
    for (size_t v = 0; v < attribute.size(); ++v) {
        if (attribute[v]) {
            scores.push_back(ranks.scores[v]);
            values.push_back(*attribute[v]);
        }
    }
    if (scores.size() < 3)
        throw TooFewSamplesError("attribute correlation needs at least 3 "
                                 "attribute-bearing vertices, got " +
                                 std::to_string(scores.size()));
    return correlate(scores, values, method);
}

CorrelationResult attribute_assortativity(
    const DirectedGraph& graph,
    const std::vector<std::optional<double>>& attribute,
    CorrelationMethod method) {
    if (static_cast<size_t>(graph.vertex_count()) != attribute.size())
        throw LengthMismatchError("attribute map does not cover the graph");

    std::vector<double> tails, heads;
    for (const auto& [u, v] : graph.edges()) {
        if (attribute[u] && attribute[v]) {
            tails.push_back(*attribute[u]);
            heads.push_back(*attribute[v]);
        }
    }
    if (tails.size() < 2)
        throw TooFewEdgesError("attribute assortativity needs at least 2 edges "
                               "between attribute-bearing vertices, got " +
                               std::to_string(tails.size()));
    return correlate(tails, heads, method);
}

} // namespace lodcloud
