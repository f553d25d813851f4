#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "lodcloud/community.hpp"
#include "lodcloud/errors.hpp"
#include "test_support.hpp"

using lodcloud::CommunityAlgorithm;
using lodcloud::Partition;
using lodcloud::UndirectedView;

namespace {

// assignment for the two-clique-bridge graph split at the bridge
Partition clique_split() {
    Partition p;
    p.assignment = {0, 0, 0, 0, 1, 1, 1, 1};
    p.community_count = 2;
    return p;
}

bool splits_cliques(const Partition& p) {
    return p.assignment == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1};
}

Partition one_community(int n) {
    Partition p;
    p.assignment.assign(static_cast<size_t>(n), 0);
    p.community_count = 1;
    return p;
}

} // namespace

TEST_CASE("single community has zero modularity") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    CHECK(lodcloud::modularity(view, one_community(8)) == doctest::Approx(0.0));
}

TEST_CASE("two-clique split scores twelve thirteenths minus a half") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const double q = lodcloud::modularity(view, clique_split());
    CHECK(q == doctest::Approx(12.0 / 13.0 - 0.5).epsilon(1e-12));
    CHECK(q == doctest::Approx(11.0 / 26.0).epsilon(1e-12));
    CHECK(q == doctest::Approx(test_support::modularity_brute(view, clique_split().assignment))
                   .epsilon(1e-12));
}

TEST_CASE("modularity requires an edge") {
    const auto g = lodcloud::DirectedGraph::create({"a", "b"}, {});
    const UndirectedView view(g);
    CHECK_THROWS_AS(lodcloud::modularity(view, one_community(2)),
                    lodcloud::EmptyEdgeSetError);
}

TEST_CASE("modularity rejects a partial partition") {
    const auto g = test_support::cycle_graph(3);
    const UndirectedView view(g);
    Partition p;
    p.assignment = {0, 0};
    p.community_count = 1;
    CHECK_THROWS_AS(lodcloud::modularity(view, p), lodcloud::LengthMismatchError);
}

TEST_CASE("all-singletons partition has negative modularity") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 8);
        const UndirectedView view(g);
        Partition p;
        p.assignment.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            p.assignment[static_cast<size_t>(v)] = v;
        p.community_count = g.vertex_count();
        CHECK(lodcloud::modularity(view, p) < 0.0);
    }
}

TEST_CASE("library modularity matches the brute formula on random partitions") {
    std::mt19937_64 rng(4096);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 8);
        const UndirectedView view(g);
        const int n = g.vertex_count();
        std::uniform_int_distribution<int> community(0, 2);
        std::vector<int> raw(static_cast<size_t>(n));
        for (int& c : raw)
            c = community(rng);
        const Partition p = lodcloud::canonical_partition(raw);
        CHECK(lodcloud::modularity(view, p) ==
              doctest::Approx(test_support::modularity_brute(view, p.assignment))
                  .epsilon(1e-12));
    }
}

TEST_CASE("canonical partition orders ids by smallest member") {
    const Partition p = lodcloud::canonical_partition({7, 7, 3, 3, 7});
    CHECK(p.assignment == std::vector<int>{0, 0, 1, 1, 0});
    CHECK(p.community_count == 2);
}

TEST_CASE("path betweenness doubles on both edges") {
    const auto g = test_support::path_graph(3);
    const UndirectedView view(g);
    const auto betweenness = lodcloud::edge_betweenness(view);
    REQUIRE(betweenness.size() == 2);
    CHECK(betweenness[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(betweenness[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("triangle betweenness is one everywhere") {
    const auto g = test_support::cycle_graph(3);
    const UndirectedView view(g);
    for (double b : lodcloud::edge_betweenness(view))
        CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bridge carries strictly maximal betweenness") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const auto betweenness = lodcloud::edge_betweenness(view);
    size_t bridge_index = view.edges().size();
    for (size_t i = 0; i < view.edges().size(); ++i)
        if (view.edges()[i] == std::pair<int, int>{0, 4})
            bridge_index = i;
    REQUIRE(bridge_index < view.edges().size());
    for (size_t i = 0; i < betweenness.size(); ++i)
        if (i != bridge_index)
            CHECK(betweenness[bridge_index] > betweenness[i]);
}

TEST_CASE("betweenness totals the sum of pair distances") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 8);
        const UndirectedView view(g);
        const auto betweenness = lodcloud::edge_betweenness(view);
        const auto dist = test_support::floyd_warshall(view);
        double total = 0.0;
        for (double b : betweenness)
            total += b;
        double expected = 0.0;
        for (int u = 0; u < view.vertex_count(); ++u)
            for (int v = u + 1; v < view.vertex_count(); ++v)
                expected += dist[u][v];
        CHECK(total == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("girvan-newman splits the two cliques") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const auto result = lodcloud::detect_girvan_newman(view);
    CHECK(splits_cliques(result.partition));
    CHECK(result.partition.community_count == 2);
    // the dendrogram tracks recomputable modularity
    for (const auto& step : result.dendrogram)
        CHECK(step.modularity ==
              doctest::Approx(lodcloud::modularity(view, step.partition)).epsilon(1e-12));
}

TEST_CASE("girvan-newman keeps a clique whole") {
    const auto g = test_support::complete_graph(5);
    const UndirectedView view(g);
    const auto result = lodcloud::detect_girvan_newman(view);
    CHECK(result.partition.community_count == 1);
}

TEST_CASE("girvan-newman separates disjoint triangles") {
    const auto g = test_support::disjoint_triangles();
    const UndirectedView view(g);
    const auto result = lodcloud::detect_girvan_newman(view);
    CHECK(result.partition.community_count == 2);
    CHECK(result.partition.assignment == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("leading eigenvector splits the two cliques") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const auto partition = lodcloud::detect_leading_eigenvector(view);
    CHECK(splits_cliques(partition));
}

TEST_CASE("leading eigenvector keeps a clique whole") {
    const auto g = test_support::complete_graph(5);
    const UndirectedView view(g);
    const auto partition = lodcloud::detect_leading_eigenvector(view);
    CHECK(partition.community_count == 1);
}

TEST_CASE("walktrap splits the two cliques") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const auto result = lodcloud::detect_walktrap(view);
    CHECK(splits_cliques(result.partition));
    for (const auto& step : result.dendrogram)
        CHECK(step.modularity ==
              doctest::Approx(lodcloud::modularity(view, step.partition)).epsilon(1e-12));
}

TEST_CASE("walktrap keeps a star together") {
    const auto g = test_support::star_graph(3);
    const UndirectedView view(g);
    const auto result = lodcloud::detect_walktrap(view);
    CHECK(result.partition.community_count == 1);
}

TEST_CASE("spinglass splits the two cliques") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const auto partition = lodcloud::detect_spinglass(view, 25, 1.0, 42);
    CHECK(splits_cliques(partition));
}

TEST_CASE("spinglass keeps a triangle together") {
    const auto g = test_support::cycle_graph(3);
    const UndirectedView view(g);
    for (unsigned long long seed : {1ULL, 42ULL, 99ULL}) {
        const auto partition = lodcloud::detect_spinglass(view, 25, 1.0, seed);
        CHECK(partition.community_count == 1);
    }
}

TEST_CASE("spinglass is deterministic for a fixed seed") {
    const auto g = test_support::two_clique_bridge();
    const UndirectedView view(g);
    const auto first = lodcloud::detect_spinglass(view, 25, 1.0, 42);
    const auto second = lodcloud::detect_spinglass(view, 25, 1.0, 42);
    CHECK(first.assignment == second.assignment);
}

TEST_CASE("spinglass refuses a disconnected view") {
    const auto g = test_support::disjoint_triangles();
    const UndirectedView view(g);
    CHECK_THROWS_AS(lodcloud::detect_spinglass(view), lodcloud::DisconnectedError);
}

TEST_CASE("the dispatcher runs every algorithm per component") {
    const auto g = test_support::disjoint_triangles();
    const UndirectedView view(g);
    for (auto algorithm :
         {CommunityAlgorithm::girvan_newman, CommunityAlgorithm::leading_eigenvector,
          CommunityAlgorithm::walktrap, CommunityAlgorithm::spinglass}) {
        const auto partition = lodcloud::detect_communities(view, algorithm);
        CHECK(partition.community_count == 2);
        CHECK(partition.assignment == std::vector<int>{0, 0, 0, 1, 1, 1});
    }
}

TEST_CASE("every algorithm returns a canonical total partition") {
    std::mt19937_64 rng(8181);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 8);
        const UndirectedView view(g);
        for (auto algorithm :
             {CommunityAlgorithm::girvan_newman, CommunityAlgorithm::leading_eigenvector,
              CommunityAlgorithm::walktrap, CommunityAlgorithm::spinglass}) {
            const auto partition = lodcloud::detect_communities(view, algorithm);
            REQUIRE(partition.assignment.size() ==
                    static_cast<size_t>(g.vertex_count()));
            const auto canonical = lodcloud::canonical_partition(partition.assignment);
            CHECK(partition.assignment == canonical.assignment);
            CHECK(partition.community_count == canonical.community_count);
        }
    }
}

TEST_CASE("no algorithm beats the exhaustive modularity maximum") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 8; ++trial) {
        const auto g = test_support::random_connected_graph(rng, 6);
        const UndirectedView view(g);
        const double best = test_support::best_partition_modularity(view);
        for (auto algorithm :
             {CommunityAlgorithm::girvan_newman, CommunityAlgorithm::leading_eigenvector,
              CommunityAlgorithm::walktrap, CommunityAlgorithm::spinglass}) {
            const auto partition = lodcloud::detect_communities(view, algorithm);
            CHECK(lodcloud::modularity(view, partition) <= best + 1e-9);
        }
    }
}

TEST_CASE("deterministic detection commutes with relabeling") {
    // reverse the vertex order of the two-clique graph: the split must follow
    const auto g = test_support::two_clique_bridge();
    std::vector<std::string> names(g.vertices().rbegin(), g.vertices().rend());
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        edges.push_back({n - 1 - u, n - 1 - v});
    const auto reversed = lodcloud::DirectedGraph::create(names, edges);

    const UndirectedView view(g);
    const UndirectedView reversed_view(reversed);
    const auto original = lodcloud::detect_girvan_newman(view).partition;
    const auto mirrored = lodcloud::detect_girvan_newman(reversed_view).partition;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const bool together = original.assignment[static_cast<size_t>(a)] ==
                                  original.assignment[static_cast<size_t>(b)];
            const bool mirrored_together =
                mirrored.assignment[static_cast<size_t>(n - 1 - a)] ==
                mirrored.assignment[static_cast<size_t>(n - 1 - b)];
            CHECK(together == mirrored_together);
        }
}

TEST_CASE("algorithm names and aliases round-trip") {
    using lodcloud::community_algorithm_name;
    using lodcloud::parse_community_algorithm;
    CHECK(community_algorithm_name(CommunityAlgorithm::girvan_newman) ==
          std::string("girvan-newman"));
    CHECK(community_algorithm_name(CommunityAlgorithm::leading_eigenvector) ==
          std::string("leading-eigenvector"));
    CHECK(community_algorithm_name(CommunityAlgorithm::walktrap) == std::string("walktrap"));
    CHECK(community_algorithm_name(CommunityAlgorithm::spinglass) == std::string("spinglass"));

    CHECK(parse_community_algorithm("eigen") == CommunityAlgorithm::leading_eigenvector);
    CHECK(parse_community_algorithm("betweenness") == CommunityAlgorithm::girvan_newman);
    CHECK(parse_community_algorithm("edge-betweenness") == CommunityAlgorithm::girvan_newman);
    CHECK(parse_community_algorithm("walktrap") == CommunityAlgorithm::walktrap);
    CHECK(parse_community_algorithm("spinglass") == CommunityAlgorithm::spinglass);
    CHECK_FALSE(parse_community_algorithm("louvain").has_value());
}
