#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lodcloud/chi_square.hpp"
#include "lodcloud/community.hpp"
#include "lodcloud/metadata.hpp"

namespace lodcloud {

struct ContingencyTable {
    std::vector<std::string> row_labels; // content labels, lexicographic
    std::vector<int> column_labels;      // community ids, ascending
    CountMatrix counts;
};

// counts[label][community] over labeled vertices only; unlabeled vertices do
// not appear.
ContingencyTable contingency_table(const Partition& partition,
                                   const MetadataMap& metadata);

struct LabelSignificance {
    ContingencyTable table;
    ChiSquareResult chi_square;
    // True when more than 20% of expected counts fall below 5; monte_carlo is
    // filled in exactly then.
    bool sparse_table = false;
    std::optional<ChiSquareResult> monte_carlo;
};

// Runs the chosen community algorithm, cross-tabulates labels against the
// resulting communities, and tests independence.
LabelSignificance label_community_significance(const UndirectedView& view,
                                               const MetadataMap& metadata,
                                               CommunityAlgorithm algorithm,
                                               const CommunityParams& params = {},
                                               int mc_shuffles = 100000,
                                               std::uint64_t mc_seed = 1009);

} // namespace lodcloud
