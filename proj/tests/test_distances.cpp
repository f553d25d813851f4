#include <random>
#include <string>

#include "doctest.h"

#include "lodcloud/distances.hpp"
#include "lodcloud/errors.hpp"
#include "test_support.hpp"

using lodcloud::UndirectedView;

TEST_CASE("path on three vertices has diameter 2 and average 4/3") {
    const auto g = test_support::path_graph(3);
    const UndirectedView view(g);
    const auto summary = lodcloud::distance_summary(view);
    CHECK(summary.diameter == 2);
    CHECK(summary.pair_count == 3);
    CHECK(summary.average_path_length == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("complete graph has diameter 1 and average 1") {
    const auto g = test_support::complete_graph(4);
    const UndirectedView view(g);
    const auto summary = lodcloud::distance_summary(view);
    CHECK(summary.diameter == 1);
    CHECK(summary.average_path_length == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(summary.pair_count == 6);
}

TEST_CASE("disconnected view raises an error naming an unreachable pair") {
    const auto g = test_support::make_graph(4, {{0, 1}, {2, 3}});
    const UndirectedView view(g);
    try {
        lodcloud::distance_summary(view);
        FAIL("expected DisconnectedGraphError");
    } catch (const lodcloud::DisconnectedGraphError& e) {
        const std::string what = e.what();
        CHECK(what.find("v0") != std::string::npos);
        CHECK(what.find("v2") != std::string::npos);
    }
}

TEST_CASE("diameter dominates the average path length") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 10);
        const UndirectedView view(g);
        const auto summary = lodcloud::distance_summary(view);
        CHECK(summary.average_path_length <= summary.diameter);
        CHECK(summary.average_path_length >= 1.0);
        CHECK(summary.pair_count ==
              static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2);
    }
}

TEST_CASE("breadth-first summary agrees with the all-pairs oracle") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 10);
        const UndirectedView view(g);
        const auto summary = lodcloud::distance_summary(view);
        const auto dist = test_support::floyd_warshall(view);

        int diameter = 0;
        long double total = 0.0L;
        long long pairs = 0;
        for (int u = 0; u < view.vertex_count(); ++u)
            for (int v = u + 1; v < view.vertex_count(); ++v) {
                REQUIRE(dist[u][v] >= 1);
                diameter = std::max(diameter, dist[u][v]);
                total += dist[u][v];
                ++pairs;
            }
        CHECK(summary.diameter == diameter);
        CHECK(summary.pair_count == pairs);
        CHECK(summary.average_path_length ==
              doctest::Approx(static_cast<double>(total / pairs)).epsilon(1e-12));
    }
}

TEST_CASE("directed summary averages only reachable ordered pairs") {
    // v0 -> v1 -> v2: reachable ordered pairs (0,1) (1,2) (0,2)
    const auto g = test_support::path_graph(3);
    const auto summary = lodcloud::directed_distance_summary(g);
    CHECK(summary.diameter == 2);
    CHECK(summary.pair_count == 3);
    CHECK(summary.average_path_length == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("directed summary of an edgeless graph has zero pairs") {
    const auto g = lodcloud::DirectedGraph::create({"a", "b"}, {});
    const auto summary = lodcloud::directed_distance_summary(g);
    CHECK(summary.pair_count == 0);
    CHECK(summary.diameter == 0);
    CHECK(summary.average_path_length == 0.0);
}

TEST_CASE("directed summary never exceeds pairs of the undirected one") {
    std::mt19937_64 rng(6510);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 9);
        const UndirectedView view(g);
        const auto undirected = lodcloud::distance_summary(view);
        const auto directed = lodcloud::directed_distance_summary(g);
        CHECK(directed.pair_count <= 2 * undirected.pair_count);
        if (directed.pair_count > 0) {
            // every directed shortest path is at least as long as the
            // undirected one between the same endpoints
            CHECK(directed.average_path_length >= 1.0);
        }
    }
}
