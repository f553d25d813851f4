#include "lodcloud/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "lodcloud/errors.hpp"

namespace lodcloud {

DirectedGraph DirectedGraph::create(std::vector<std::string> vertices,
                                    std::vector<std::pair<int, int>> edges) {
    DirectedGraph g;
    g.vertices_ = std::move(vertices);
    const int n = static_cast<int>(g.vertices_.size());
    g.index_.reserve(g.vertices_.size());
    for (int i = 0; i < n; ++i) {
        const std::string& name = g.vertices_[i];
        if (name.empty())
            throw MalformedLineError("vertex " + std::to_string(i) + " has an empty id");
        if (!g.index_.emplace(name, i).second)
            throw MalformedLineError("duplicate vertex id '" + name + "'");
    }
    g.out_.resize(n);
    g.in_.resize(n);
    std::unordered_set<long long> seen;
    seen.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw UnknownVertexError("edge endpoint index out of range: (" +
                                     std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw SelfLoopError("self-loop on vertex '" + g.vertices_[u] + "'");
        const long long key = static_cast<long long>(u) * n + v;
        if (!seen.insert(key).second)
            throw DuplicateEdgeError("duplicate edge '" + g.vertices_[u] + "' -> '" +
                                     g.vertices_[v] + "'");
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    g.edges_ = std::move(edges);
    return g;
}

std::optional<int> DirectedGraph::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int DirectedGraph::require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx)
        throw UnknownVertexError("unknown vertex '" + std::string(name) + "'");
    return *idx;
}

int DirectedGraph::degree(int v, Direction direction) const {
    switch (direction) {
    case Direction::in:
        return static_cast<int>(in_[v].size());
    case Direction::out:
        return static_cast<int>(out_[v].size());
    case Direction::total:
        return static_cast<int>(in_[v].size() + out_[v].size());
    }
    return 0;
}

int DirectedGraph::degree(std::string_view name, Direction direction) const {
    return degree(require_index(name), direction);
}

UndirectedView::UndirectedView(const DirectedGraph& base) : base_(&base) {
    const int n = base.vertex_count();
    adjacency_.resize(n);
    std::unordered_set<long long> seen;
    seen.reserve(base.edges().size());
    for (const auto& [u, v] : base.edges()) {
        const int a = std::min(u, v);
        const int b = std::max(u, v);
        const long long key = static_cast<long long>(a) * n + b;
        if (!seen.insert(key).second)
            continue;
        edges_.emplace_back(a, b);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
}

UndirectedView undirected_view(const DirectedGraph& graph) {
    return UndirectedView(graph);
}

DirectedGraph induced_subgraph(const DirectedGraph& graph,
                               const std::set<std::string>& keep) {
    std::vector<int> kept;
    for (const std::string& name : keep)
        kept.push_back(graph.require_index(name));
    std::sort(kept.begin(), kept.end());

    std::vector<int> remap(graph.vertex_count(), -1);
    std::vector<std::string> vertices;
    vertices.reserve(kept.size());
    for (int old_index : kept) {
        remap[old_index] = static_cast<int>(vertices.size());
        vertices.push_back(graph.vertex_name(old_index));
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges())
        if (remap[u] >= 0 && remap[v] >= 0)
            edges.emplace_back(remap[u], remap[v]);

    return DirectedGraph::create(std::move(vertices), std::move(edges));
}

namespace {

std::string strip(const std::string& line) {
    size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

} // namespace

DirectedGraph load_edge_list(std::istream& source) {
    std::vector<std::string> vertices;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;

    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end())
            return it->second;
        const int id = static_cast<int>(vertices.size());
        vertices.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::string raw;
    long line_number = 0;
    while (std::getline(source, raw)) {
        ++line_number;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#')
            continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw MalformedLineError("line " + std::to_string(line_number) +
                                     ": expected 'source<TAB>target', got '" + line + "'");
        std::string source_name = strip(line.substr(0, tab));
        std::string target_name = strip(line.substr(tab + 1));
        if (source_name.empty() || target_name.empty() ||
            target_name.find('\t') != std::string::npos)
            throw MalformedLineError("line " + std::to_string(line_number) +
                                     ": expected exactly two non-empty fields");
        if (source_name == target_name)
            throw SelfLoopError("line " + std::to_string(line_number) +
                                ": self-loop on vertex '" + source_name + "'");
        const int u = intern(source_name);
        const int v = intern(target_name);
        // 2^21 vertices is far beyond any input this loader sees.
        const long long key = (static_cast<long long>(u) << 21) | v;
        if (!seen.insert(key).second)
            throw DuplicateEdgeError("line " + std::to_string(line_number) +
                                     ": duplicate edge '" + source_name + "' -> '" +
                                     target_name + "'");
        edges.emplace_back(u, v);
    }
    if (vertices.empty())
        throw EmptyInputError("edge list contains no edges");
    return DirectedGraph::create(std::move(vertices), std::move(edges));
}

void write_edge_list(const DirectedGraph& graph, std::ostream& out) {
    for (const auto& [u, v] : graph.edges())
        out << graph.vertex_name(u) << '\t' << graph.vertex_name(v) << '\n';
}

} // namespace lodcloud
