#include "lodcloud/components.hpp"

#include <algorithm>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

// Relabels raw component ids so that component 0 is the one containing the
// lowest vertex index, and builds the descending size multiset.
ComponentDecomposition finalize(std::vector<int> raw, int raw_count) {
    const int n = static_cast<int>(raw.size());
    std::vector<int> remap(raw_count, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (remap[raw[v]] < 0)
            remap[raw[v]] = next++;

    ComponentDecomposition result;
    result.assignment.resize(n);
    result.sizes.assign(raw_count, 0);
    for (int v = 0; v < n; ++v) {
        const int id = remap[raw[v]];
        result.assignment[v] = id;
        ++result.sizes[id];
    }
    std::sort(result.sizes.begin(), result.sizes.end(), std::greater<int>());
    return result;
}

} // namespace

ComponentDecomposition strongly_connected_components(const DirectedGraph& graph) {
    const int n = graph.vertex_count();
    // Tarjan with an explicit stack; recursion depth would be unbounded on
    // long path graphs.
    std::vector<int> index(n, -1);
    std::vector<int> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<int> component(n, -1);
    int next_index = 0;
    int component_count = 0;

    struct Frame {
        int vertex;
        size_t next_child;
    };
    std::vector<Frame> call_stack;

    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const int v = frame.vertex;
            const auto& out = graph.out_neighbors(v);
            if (frame.next_child < out.size()) {
                const int w = out[frame.next_child++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component[w] = component_count;
                        if (w == v)
                            break;
                    }
                    ++component_count;
                }
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    const int parent = call_stack.back().vertex;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
                }
            }
        }
    }
    return finalize(std::move(component), component_count);
}

ComponentDecomposition weakly_connected_components(const DirectedGraph& graph) {
    const int n = graph.vertex_count();
    UndirectedView view(graph);
    std::vector<int> component(n, -1);
    int component_count = 0;
    std::vector<int> frontier;
    for (int root = 0; root < n; ++root) {
        if (component[root] >= 0)
            continue;
        component[root] = component_count;
        frontier.assign(1, root);
        while (!frontier.empty()) {
            const int v = frontier.back();
            frontier.pop_back();
            for (int w : view.neighbors(v)) {
                if (component[w] < 0) {
                    component[w] = component_count;
                    frontier.push_back(w);
                }
            }
        }
        ++component_count;
    }
    return finalize(std::move(component), component_count);
}

bool is_weakly_connected(const DirectedGraph& graph) {
    if (graph.vertex_count() == 0)
        throw EmptyGraphError("connectivity is undefined on an empty graph");
    return weakly_connected_components(graph).component_count() == 1;
}

} // namespace lodcloud
