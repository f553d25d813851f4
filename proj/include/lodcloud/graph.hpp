#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lodcloud {

enum class Direction { in, out, total };

// Immutable simple directed graph over string-identified vertices.
// Vertex order is construction order; edges are (source index, target index)
// pairs in construction order. Self-loops and duplicate directed edges are
// rejected at construction.
class DirectedGraph {
public:
    static DirectedGraph create(std::vector<std::string> vertices,
                                std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }

    std::optional<int> index_of(std::string_view name) const;
    // Same as index_of but throws UnknownVertexError.
    int require_index(std::string_view name) const;

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    int degree(int v, Direction direction) const;
    int degree(std::string_view name, Direction direction) const;

private:
    DirectedGraph() = default;

    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Unweighted undirected collapse of a directed graph. Reciprocal directed
// pairs u->v, v->u map to a single undirected edge; edge pairs are stored as
// (min index, max index) in first-appearance order.
class UndirectedView {
public:
    explicit UndirectedView(const DirectedGraph& base);

    const DirectedGraph& base() const { return *base_; }
    int vertex_count() const { return base_->vertex_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

private:
    const DirectedGraph* base_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

UndirectedView undirected_view(const DirectedGraph& graph);

// Subgraph induced on `keep`; relative vertex and edge order preserved.
DirectedGraph induced_subgraph(const DirectedGraph& graph,
                               const std::set<std::string>& keep);

// Reads a TAB-separated edge list ("source<TAB>target" per line, '#'
// comments and blank lines allowed). Vertex order is first appearance,
// edge order is line order.
DirectedGraph load_edge_list(std::istream& source);

// Inverse of load_edge_list modulo comments and blank lines.
void write_edge_list(const DirectedGraph& graph, std::ostream& out);

} // namespace lodcloud
