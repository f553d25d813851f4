#include "lodcloud/metadata_analysis.hpp"

#include <algorithm>
#include <map>

#include "lodcloud/errors.hpp"

namespace lodcloud {

ContingencyTable contingency_table(const Partition& partition,
                                   const MetadataMap& metadata) {
    if (partition.assignment.size() != metadata.size())
        throw LengthMismatchError("partition covers " +
                                  std::to_string(partition.assignment.size()) +
                                  " vertices, metadata covers " +
                                  std::to_string(metadata.size()));

    std::map<std::string, std::vector<long long>> rows;
    for (size_t v = 0; v < metadata.size(); ++v) {
        if (!metadata[v].content_label)
            continue;
        auto [it, inserted] = rows.try_emplace(
            *metadata[v].content_label,
            std::vector<long long>(partition.community_count, 0));
        ++it->second[partition.assignment[v]];
    }
    if (rows.empty())
        throw NoLabeledVerticesError("no vertex carries a content label");

    ContingencyTable table;
    table.column_labels.resize(partition.community_count);
    for (int c = 0; c < partition.community_count; ++c)
        table.column_labels[c] = c;
    for (auto& [label, counts] : rows) {
        table.row_labels.push_back(label);
        table.counts.push_back(std::move(counts));
    }
    return table;
}

LabelSignificance label_community_significance(const UndirectedView& view,
                                               const MetadataMap& metadata,
                                               CommunityAlgorithm algorithm,
                                               const CommunityParams& params,
                                               int mc_shuffles,
                                               std::uint64_t mc_seed) {
    const Partition partition = detect_communities(view, algorithm, params);

    LabelSignificance result;
    result.table = contingency_table(partition, metadata);
    result.chi_square = chi_square_independence(result.table.counts);
    result.sparse_table = expected_below_five_fraction(result.table.counts) > 0.2;
    if (result.sparse_table)
        result.monte_carlo =
            chi_square_monte_carlo(result.table.counts, mc_shuffles, mc_seed);
    return result;
}

} // namespace lodcloud
