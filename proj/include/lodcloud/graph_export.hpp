#pragma once

#include <string>

#include "lodcloud/centrality.hpp"
#include "lodcloud/community.hpp"
#include "lodcloud/graph.hpp"
#include "lodcloud/layout.hpp"
#include "lodcloud/metadata.hpp"

namespace lodcloud {

enum class ExportFormat { dot, graphml };

// Serializes the graph with optional decoration: community fill colors from
// a fixed 20-color palette (wrapping, with a shape change per wrap), vertex
// sizes mapped linearly from PageRank scores, positions from a layout, and
// content/triples attributes from metadata (GraphML only). Byte-stable for
// identical inputs. Null pointers mean "not supplied".
std::string export_graph(const DirectedGraph& graph,
                         const Partition* partition = nullptr,
                         const PageRankVector* ranks = nullptr,
                         const LayoutResult* layout = nullptr,
                         const MetadataMap* metadata = nullptr,
                         ExportFormat format = ExportFormat::dot);

// Minimal reader for the DOT dialect emitted by export_graph; recovers the
// vertex and edge sets.
DirectedGraph parse_dot(const std::string& text);

// Palette entry for a community id (wraps past 20); exposed for tests.
std::string community_color(int community);
std::string community_shape(int community);

} // namespace lodcloud
