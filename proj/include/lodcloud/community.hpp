#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lodcloud/graph.hpp"

namespace lodcloud {

struct Partition {
    // vertex index -> community id; ids contiguous from 0 and ordered by the
    // smallest vertex index each community contains.
    std::vector<int> assignment;
    int community_count = 0;
};

// Relabels arbitrary community labels into canonical form.
Partition canonical_partition(const std::vector<int>& raw_assignment);

struct DendrogramStep {
    int step = 0;
    Partition partition;
    double modularity = 0.0;
};

using Dendrogram = std::vector<DendrogramStep>;

// Newman-Girvan modularity Q = sum_c (e_c/m - (d_c/2m)^2) on the undirected
// view; e_c counts intra-community edges, d_c sums member degrees.
double modularity(const UndirectedView& view, const Partition& partition);

// Shortest-path edge betweenness, indexed like view.edges(). Equal-length
// shortest paths split credit equally; each unordered vertex pair contributes
// once.
std::vector<double> edge_betweenness(const UndirectedView& view);

struct GirvanNewmanResult {
    Partition partition;
    Dendrogram dendrogram;
};

// Removes the highest-betweenness edge (ties: lowest edge index), recomputing
// betweenness after every removal; records a partition whenever a component
// splits (step 0 records the starting components) and returns the recorded
// partition of maximal modularity.
GirvanNewmanResult detect_girvan_newman(const UndirectedView& view);

// Recursive spectral bisection of the modularity matrix, run per connected
// component. Throws NoConvergenceError if power iteration stalls.
Partition detect_leading_eigenvector(const UndirectedView& view);

struct WalktrapResult {
    Partition partition;
    Dendrogram dendrogram;
};

// Agglomerative merging by short random-walk distances, run per connected
// component; the returned partition is the dendrogram cut of maximal
// modularity.
WalktrapResult detect_walktrap(const UndirectedView& view, int walk_length = 4);

// Simulated annealing on the Potts model with a configuration null model; at
// gamma = 1 the ground state maximizes modularity. Deterministic for a fixed
// seed. Requires a connected view.
Partition detect_spinglass(const UndirectedView& view, int spins = 25,
                           double gamma = 1.0, unsigned long long seed = 42);

enum class CommunityAlgorithm {
    girvan_newman,
    leading_eigenvector,
    walktrap,
    spinglass,
};

struct CommunityParams {
    int walk_length = 4;
    int spins = 25;
    double gamma = 1.0;
    unsigned long long seed = 42;
    // Extra spinglass runs with derived seeds; the best-modularity result
    // wins, ties to the lowest restart index.
    int restarts = 1;
};

// Runs the chosen algorithm on every connected component of the view and
// concatenates the per-component partitions.
Partition detect_communities(const UndirectedView& view,
                             CommunityAlgorithm algorithm,
                             const CommunityParams& params = {});

const char* community_algorithm_name(CommunityAlgorithm algorithm);
std::optional<CommunityAlgorithm> parse_community_algorithm(std::string_view name);

} // namespace lodcloud
