#include "lodcloud/metadata.hpp"

#include <istream>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

MetadataMap load_metadata(std::istream& source, const DirectedGraph& graph) {
    MetadataMap map(graph.vertex_count());
    std::vector<bool> seen(graph.vertex_count(), false);

    std::string raw;
    long line_number = 0;
    bool header_seen = false;
    while (std::getline(source, raw)) {
        ++line_number;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != "id,content,triples")
                throw MalformedRowError("line " + std::to_string(line_number) +
                                        ": expected header 'id,content,triples'");
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 3)
            throw MalformedRowError("line " + std::to_string(line_number) +
                                    ": expected 3 fields, got " +
                                    std::to_string(fields.size()));
        const std::string id = trim(fields[0]);
        const std::string content = trim(fields[1]);
        const std::string triples = trim(fields[2]);
        if (id.empty())
            throw MalformedRowError("line " + std::to_string(line_number) +
                                    ": empty id");
        auto vertex = graph.index_of(id);
        if (!vertex)
            throw UnknownVertexError("line " + std::to_string(line_number) +
                                     ": unknown vertex '" + id + "'");
        if (seen[*vertex])
            throw MalformedRowError("line " + std::to_string(line_number) +
                                    ": repeated row for id '" + id +
                                    "'; exactly one row per vertex is allowed");
        seen[*vertex] = true;
        VertexMetadata& meta = map[*vertex];
        if (!content.empty())
            meta.content_label = content;
        if (!triples.empty()) {
            long long value = 0;
            try {
                size_t consumed = 0;
                value = std::stoll(triples, &consumed);
                if (consumed != triples.size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw MalformedRowError("line " + std::to_string(line_number) +
                                        ": triple count '" + triples +
                                        "' is not an integer");
            }
            if (value < 0)
                throw NegativeTripleCountError("line " + std::to_string(line_number) +
                                               ": negative triple count for '" + id + "'");
            meta.triple_count = value;
        }
    }
    return map;
}

} // namespace lodcloud
