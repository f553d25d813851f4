#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lodcloud/graph.hpp"

namespace lodcloud {

struct VertexMetadata {
    std::optional<std::string> content_label;
    std::optional<long long> triple_count;
};

// Indexed by graph vertex id; total over the graph's vertices.
using MetadataMap = std::vector<VertexMetadata>;

// Reads a comma-delimited table with header `id,content,triples`.
// Empty cells mean "absent"; vertices missing from the file get
// all-absent metadata.
MetadataMap load_metadata(std::istream& source, const DirectedGraph& graph);

} // namespace lodcloud
