#include "lodcloud/graph_export.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

constexpr std::array<const char*, 20> kPalette = {
    "#4E79A7", "#F28E2B", "#E15759", "#76B7B2", "#59A14F",
    "#EDC948", "#B07AA1", "#FF9DA7", "#9C755F", "#BAB0AC",
    "#A0CBE8", "#FFBE7D", "#FF9D9A", "#86BCB6", "#8CD17D",
    "#F1CE63", "#D4A6C8", "#FABFD2", "#D7B5A6", "#79706E",
};

constexpr std::array<const char*, 5> kShapes = {
    "circle", "box", "diamond", "triangle", "hexagon",
};

constexpr double kMinRadius = 0.1;
constexpr double kMaxRadius = 0.5;

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string dot_escape(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out.push_back(c);
        }
    }
    return out;
}

// Linear score -> radius map; the maximum score lands on the maximum radius.
double vertex_radius(double score, double lo, double hi) {
    if (hi == lo)
        return kMaxRadius;
    return kMinRadius + (kMaxRadius - kMinRadius) * (score - lo) / (hi - lo);
}

std::string export_dot(const DirectedGraph& graph, const Partition* partition,
                       const PageRankVector* ranks, const LayoutResult* layout) {
    double lo = 0.0, hi = 0.0;
    if (ranks) {
        lo = *std::min_element(ranks->scores.begin(), ranks->scores.end());
        hi = *std::max_element(ranks->scores.begin(), ranks->scores.end());
    }

    std::string out = "digraph lod {\n";
    for (int v = 0; v < graph.vertex_count(); ++v) {
        out += "  \"" + dot_escape(graph.vertex_name(v)) + "\"";
        std::string attrs;
        if (partition) {
            const int c = partition->assignment[v];
            attrs += "fillcolor=\"" + std::string(community_color(c)) +
                     "\",style=filled,shape=" + community_shape(c);
        }
        if (ranks) {
            if (!attrs.empty())
                attrs += ",";
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "width=%.4f,fixedsize=true",
                          vertex_radius(ranks->scores[v], lo, hi));
            attrs += buffer;
        }
        if (layout) {
            if (!attrs.empty())
                attrs += ",";
            attrs += "pos=\"" + format_double(layout->positions[v].first) + "," +
                     format_double(layout->positions[v].second) + "!\"";
        }
        if (!attrs.empty())
            out += " [" + attrs + "]";
        out += ";\n";
    }
    for (const auto& [u, v] : graph.edges())
        out += "  \"" + dot_escape(graph.vertex_name(u)) + "\" -> \"" +
               dot_escape(graph.vertex_name(v)) + "\";\n";
    out += "}\n";
    return out;
}

std::string export_graphml(const DirectedGraph& graph, const Partition* partition,
                           const PageRankVector* ranks, const LayoutResult* layout,
                           const MetadataMap* metadata) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    if (partition)
        out += "  <key id=\"community\" for=\"node\" attr.name=\"community\" "
               "attr.type=\"int\"/>\n";
    if (ranks)
        out += "  <key id=\"pagerank\" for=\"node\" attr.name=\"pagerank\" "
               "attr.type=\"double\"/>\n";
    if (layout)
        out += "  <key id=\"x\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n"
               "  <key id=\"y\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n";
    if (metadata)
        out += "  <key id=\"content\" for=\"node\" attr.name=\"content\" "
               "attr.type=\"string\"/>\n"
               "  <key id=\"triples\" for=\"node\" attr.name=\"triples\" "
               "attr.type=\"long\"/>\n";
    out += "  <graph id=\"G\" edgedefault=\"directed\">\n";

    for (int v = 0; v < graph.vertex_count(); ++v) {
        out += "    <node id=\"" + xml_escape(graph.vertex_name(v)) + "\">";
        std::string data;
        if (partition)
            data += "<data key=\"community\">" +
                    std::to_string(partition->assignment[v]) + "</data>";
        if (ranks)
            data += "<data key=\"pagerank\">" + format_double(ranks->scores[v]) +
                    "</data>";
        if (layout) {
            data += "<data key=\"x\">" + format_double(layout->positions[v].first) +
                    "</data>";
            data += "<data key=\"y\">" + format_double(layout->positions[v].second) +
                    "</data>";
        }
        if (metadata) {
            const VertexMetadata& meta = (*metadata)[v];
            if (meta.content_label)
                data += "<data key=\"content\">" + xml_escape(*meta.content_label) +
                        "</data>";
            if (meta.triple_count)
                data += "<data key=\"triples\">" + std::to_string(*meta.triple_count) +
                        "</data>";
        }
        out += data + "</node>\n";
    }
    for (const auto& [u, v] : graph.edges())
        out += "    <edge source=\"" + xml_escape(graph.vertex_name(u)) +
               "\" target=\"" + xml_escape(graph.vertex_name(v)) + "\"/>\n";
    out += "  </graph>\n</graphml>\n";
    return out;
}

} // namespace

std::string community_color(int community) {
    return kPalette[static_cast<size_t>(community) % kPalette.size()];
}

std::string community_shape(int community) {
    return kShapes[(static_cast<size_t>(community) / kPalette.size()) % kShapes.size()];
}

std::string export_graph(const DirectedGraph& graph, const Partition* partition,
                         const PageRankVector* ranks, const LayoutResult* layout,
                         const MetadataMap* metadata, ExportFormat format) {
    const size_t n = static_cast<size_t>(graph.vertex_count());
    if (partition && partition->assignment.size() != n)
        throw InconsistentCoverageError("partition does not cover every vertex");
    if (ranks && ranks->scores.size() != n)
        throw InconsistentCoverageError("rank vector does not cover every vertex");
    if (layout && layout->positions.size() != n)
        throw InconsistentCoverageError("layout does not cover every vertex");
    if (metadata && metadata->size() != n)
        throw InconsistentCoverageError("metadata does not cover every vertex");

    if (format == ExportFormat::dot)
        return export_dot(graph, partition, ranks, layout);
    return export_graphml(graph, partition, ranks, layout, metadata);
}

DirectedGraph parse_dot(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;

    auto intern = [&](const std::string& name) {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name)
                return static_cast<int>(i);
        vertices.push_back(name);
        return static_cast<int>(vertices.size() - 1);
    };

    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos)
            end = text.size();
        const std::string line = text.substr(pos, end - pos);
        pos = end + 1;

        // Collect quoted identifiers; attribute strings live inside [...] and
        // are skipped.
        names.clear();
        size_t i = 0;
        const size_t bracket = line.find('[');
        const size_t limit = bracket == std::string::npos ? line.size() : bracket;
        while (i < limit) {
            if (line[i] != '"') {
                ++i;
                continue;
            }
            std::string name;
            ++i;
            while (i < limit && line[i] != '"') {
                if (line[i] == '\\' && i + 1 < limit)
                    ++i;
                name.push_back(line[i]);
                ++i;
            }
            ++i;
            names.push_back(std::move(name));
        }
        if (names.empty())
            continue;
        if (names.size() == 1) {
            intern(names[0]);
        } else if (names.size() == 2 && line.find("->") != std::string::npos) {
            const int u = intern(names[0]);
            const int v = intern(names[1]);
            edges.emplace_back(u, v);
        } else {
            throw MalformedLineError("unparsable dot line: " + line);
        }
    }
    if (vertices.empty())
        throw EmptyInputError("dot text contains no vertices");
    return DirectedGraph::create(std::move(vertices), std::move(edges));
}

} // namespace lodcloud
