#include <cmath>
#include <optional>
#include <random>

#include "doctest.h"

#include "lodcloud/centrality.hpp"
#include "lodcloud/degree_stats.hpp"
#include "lodcloud/errors.hpp"
#include "test_support.hpp"

using lodcloud::CorrelationMethod;
using lodcloud::DanglingPolicy;
using lodcloud::pagerank;

TEST_CASE("3-cycle pagerank is uniform") {
    const auto g = test_support::cycle_graph(3);
    const auto ranks = pagerank(g);
    for (double score : ranks.scores)
        CHECK(std::fabs(score - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("mutual pair splits evenly") {
    const auto g = test_support::make_graph(2, {{0, 1}, {1, 0}});
    const auto ranks = pagerank(g);
    CHECK(ranks.scores[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ranks.scores[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dangling sink accumulates mass") {
    // a -> b with b dangling; fixed point of the 2x2 system:
    // pi_a = 0.075 + 0.425 pi_b, pi_b = 0.075 + 0.85 pi_a + 0.425 pi_b
    const auto g = test_support::make_graph(2, {{0, 1}});
    const auto ranks = pagerank(g);
    CHECK(ranks.scores[0] == doctest::Approx(0.350877193).epsilon(1e-8));
    CHECK(ranks.scores[1] == doctest::Approx(0.649122807).epsilon(1e-8));
    // the dense oracle agrees
    const auto dense = test_support::pagerank_dense_solve(g, 0.85);
    CHECK(ranks.scores[0] == doctest::Approx(dense[0]).epsilon(1e-10));
    CHECK(ranks.scores[1] == doctest::Approx(dense[1]).epsilon(1e-10));
}

TEST_CASE("scores sum to one and stay positive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = test_support::random_digraph(rng, 12, 0.25);
        const auto ranks = pagerank(g);
        double sum = 0.0;
        for (double score : ranks.scores) {
            CHECK(score > 0.0);
            sum += score;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-9);
    }
}

TEST_CASE("power iteration matches the dense solve") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = test_support::random_digraph(rng, 15, 0.2);
        const auto ranks = pagerank(g);
        const auto dense = test_support::pagerank_dense_solve(g, 0.85);
        for (size_t v = 0; v < dense.size(); ++v)
            CHECK(std::fabs(ranks.scores[v] - dense[v]) < 1e-8);
    }
}

TEST_CASE("teleport-only policy drops dangling outflow and renormalizes") {
    const auto g = test_support::make_graph(2, {{0, 1}});
    const auto ranks = pagerank(g, 0.85, 1e-12, 200, DanglingPolicy::teleport_only);
    double sum = 0.0;
    for (double score : ranks.scores)
        sum += score;
    CHECK(std::fabs(sum - 1.0) < 1e-9);
    // without redistribution the sink keeps its mass, so its relative share
    // exceeds the uniform-policy share; fixed point solves
    // 0.85 x^2 + 0.15 x - 0.075 = 0 for the source score x
    const auto uniform = pagerank(g);
    CHECK(ranks.scores[1] > ranks.scores[0]);
    CHECK(ranks.scores[1] > uniform.scores[1]);
    const double x = (-0.15 + std::sqrt(0.0225 + 4.0 * 0.85 * 0.075)) / 1.7;
    CHECK(ranks.scores[0] == doctest::Approx(x).epsilon(1e-8));
}

TEST_CASE("an isolated vertex dilutes every other score") {
    std::mt19937_64 rng(2121);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = test_support::random_digraph(rng, 8, 0.4);
        const auto before = pagerank(g);

        std::vector<std::string> names = g.vertices();
        names.push_back("isolated_extra");
        const auto extended = lodcloud::DirectedGraph::create(names, g.edges());
        const auto after = pagerank(extended);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(after.scores[static_cast<size_t>(v)] <
                  before.scores[static_cast<size_t>(v)]);
    }
}

TEST_CASE("bad damping and empty graphs are rejected") {
    const auto g = test_support::cycle_graph(3);
    CHECK_THROWS_AS(pagerank(g, 0.0), lodcloud::DomainError);
    CHECK_THROWS_AS(pagerank(g, 1.0), lodcloud::DomainError);
    const auto empty = lodcloud::DirectedGraph::create({}, {});
    CHECK_THROWS_AS(pagerank(empty), lodcloud::EmptyGraphError);
}

TEST_CASE("no convergence inside the iteration cap raises") {
    const auto g = test_support::cycle_graph(3);
    CHECK_THROWS_AS(pagerank(g, 0.85, 0.0, 5), lodcloud::NoConvergenceError);
}

TEST_CASE("top-k breaks score ties alphabetically") {
    const auto g = test_support::cycle_graph(3);
    const auto ranks = pagerank(g);
    const auto top = lodcloud::top_k_central(g, ranks, 3);
    REQUIRE(top.size() == 3);
    CHECK(top[0].first == "v0");
    CHECK(top[1].first == "v1");
    CHECK(top[2].first == "v2");
}

TEST_CASE("top-k with k equal to the vertex count is the full ranking") {
    std::mt19937_64 rng(3434);
    const auto g = test_support::random_digraph(rng, 10, 0.3);
    const auto ranks = pagerank(g);
    const auto top = lodcloud::top_k_central(g, ranks, g.vertex_count());
    CHECK(static_cast<int>(top.size()) == g.vertex_count());
    for (size_t i = 1; i < top.size(); ++i)
        CHECK(top[i - 1].second >= top[i].second);
}

TEST_CASE("top-k is a stable prefix of top-(k+1)") {
    std::mt19937_64 rng(909);
    const auto g = test_support::random_digraph(rng, 12, 0.3);
    const auto ranks = pagerank(g);
    for (int k = 1; k < g.vertex_count(); ++k) {
        const auto shorter = lodcloud::top_k_central(g, ranks, k);
        const auto longer = lodcloud::top_k_central(g, ranks, k + 1);
        for (int i = 0; i < k; ++i) {
            CHECK(shorter[static_cast<size_t>(i)].first ==
                  longer[static_cast<size_t>(i)].first);
        }
    }
}

TEST_CASE("top-k bounds are enforced") {
    const auto g = test_support::cycle_graph(3);
    const auto ranks = pagerank(g);
    CHECK_THROWS_AS(lodcloud::top_k_central(g, ranks, 0), lodcloud::OutOfRangeError);
    CHECK_THROWS_AS(lodcloud::top_k_central(g, ranks, 4), lodcloud::OutOfRangeError);
}

TEST_CASE("attribute correlation against itself is one") {
    const auto g = test_support::two_clique_bridge();
    const auto ranks = pagerank(g);
    std::vector<std::optional<double>> attribute;
    for (double score : ranks.scores)
        attribute.push_back(score);
    const auto result = lodcloud::centrality_attribute_correlation(
        ranks, attribute, CorrelationMethod::pearson);
    CHECK(result.coefficient == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rank reversal flips spearman to minus one") {
    const auto g = test_support::two_clique_bridge();
    const auto ranks = pagerank(g);
    // midranks of the negated scores exactly reverse the rank order
    std::vector<std::optional<double>> attribute;
    for (double score : ranks.scores)
        attribute.push_back(-score);
    const auto result = lodcloud::centrality_attribute_correlation(
        ranks, attribute, CorrelationMethod::spearman);
    CHECK(result.coefficient == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("attribute correlation needs three attributed vertices") {
    const auto g = test_support::cycle_graph(3);
    const auto ranks = pagerank(g);
    std::vector<std::optional<double>> attribute = {1.0, 2.0, std::nullopt};
    CHECK_THROWS_AS(lodcloud::centrality_attribute_correlation(ranks, attribute,
                                                               CorrelationMethod::pearson),
                    lodcloud::TooFewSamplesError);
}

TEST_CASE("attribute assortativity over a path is collinear") {
    const auto g = test_support::path_graph(3);
    std::vector<std::optional<double>> attribute = {1.0, 2.0, 3.0};
    const auto result =
        lodcloud::attribute_assortativity(g, attribute, CorrelationMethod::pearson);
    CHECK(result.coefficient == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.n == 2);
}

TEST_CASE("equal attributes have no assortativity") {
    const auto g = test_support::path_graph(3);
    std::vector<std::optional<double>> attribute = {7.0, 7.0, 7.0};
    CHECK_THROWS_AS(lodcloud::attribute_assortativity(g, attribute,
                                                      CorrelationMethod::pearson),
                    lodcloud::ZeroVarianceError);
}

TEST_CASE("attribute assortativity needs two covered edges") {
    const auto g = test_support::path_graph(3);
    std::vector<std::optional<double>> attribute = {1.0, 2.0, std::nullopt};
    CHECK_THROWS_AS(lodcloud::attribute_assortativity(g, attribute,
                                                      CorrelationMethod::pearson),
                    lodcloud::TooFewEdgesError);
}

TEST_CASE("attribute assortativity matches endpoint correlation on the induced subgraph") {
    std::mt19937_64 rng(5678);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = test_support::random_digraph(rng, 10, 0.35);
        if (g.edge_count() < 3)
            continue;
        // attribute = total degree, present everywhere: assortativity over the
        // attribute must equal degree assortativity computed directly
        std::vector<std::optional<double>> attribute;
        for (int v = 0; v < g.vertex_count(); ++v)
            attribute.push_back(static_cast<double>(g.degree(v, lodcloud::Direction::total)));
        lodcloud::CorrelationResult via_attribute, via_degrees;
        try {
            via_attribute = lodcloud::attribute_assortativity(g, attribute,
                                                              CorrelationMethod::pearson);
            via_degrees = lodcloud::assortativity(g, lodcloud::Direction::total,
                                                  CorrelationMethod::pearson);
        } catch (const lodcloud::ZeroVarianceError&) {
            continue;
        }
        CHECK(via_attribute.coefficient ==
              doctest::Approx(via_degrees.coefficient).epsilon(1e-12));
    }
}
