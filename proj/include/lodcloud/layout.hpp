#pragma once

#include <utility>
#include <vector>

#include "lodcloud/graph.hpp"

namespace lodcloud {

struct LayoutResult {
    std::vector<std::pair<double, double>> positions; // unit square
    int iterations = 0;
    unsigned long long seed = 0;
};

// Force-directed layout with ideal edge length k = sqrt(1/|V|), all-pairs
// k^2/d repulsion, per-edge d^2/k attraction, and a linearly cooled
// displacement cap. Deterministic for fixed (graph, iterations, seed).
// A single vertex sits at the frame center. When energy_trace is non-null it
// receives the spring potential after every iteration.
LayoutResult layout_fruchterman_reingold(const UndirectedView& view,
                                         int iterations = 500,
                                         unsigned long long seed = 7,
                                         std::vector<double>* energy_trace = nullptr);

// Spring potential of a set of positions: sum over edges of d^3/(3k) minus
// sum over vertex pairs of k^2 ln d.
double layout_energy(const UndirectedView& view, const LayoutResult& layout);

} // namespace lodcloud
