#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lodcloud/centrality.hpp"
#include "lodcloud/community.hpp"
#include "lodcloud/correlation.hpp"
#include "lodcloud/distances.hpp"
#include "lodcloud/graph.hpp"
#include "lodcloud/metadata.hpp"
#include "lodcloud/metadata_analysis.hpp"

namespace lodcloud {

// Everything the analyze subcommand computes, gathered into one struct so the
// JSON emitter and the golden validator can both walk it.

struct AnalysisConfig {
    CommunityParams community;
    double damping = 0.85;
    double pagerank_tolerance = 1e-12;
    int pagerank_max_iterations = 200;
    DanglingPolicy dangling_policy = DanglingPolicy::uniform;
    int degree_table_k = 11;
    int pagerank_table_k = 15;
    int power_law_x_min = 1;
    int mc_shuffles = 100000;
    std::uint64_t mc_seed = 1009;
};

struct DegreeTableRow {
    std::string vertex;
    int degree = 0;
};

struct PageRankTableRow {
    std::string vertex;
    double score = 0.0;
};

struct CorrelationCell {
    double coefficient = 0.0;
    std::optional<double> p_value;
    int n = 0;
};

struct PowerLawSummary {
    int x_min = 1;
    std::optional<double> mle_alpha;
    std::optional<double> least_squares_alpha;
};

struct DegreeCorrelationSummary {
    std::optional<CorrelationCell> spearman;
    std::optional<CorrelationCell> kendall;
    std::string max_in_degree_vertex;
    int max_in_degree_total_degree = 0;
    std::vector<int> max_in_degree_neighbor_total_degrees;
};

// One row of the 3x3 assortativity table; degenerate inputs leave cells empty.
struct AssortativityRow {
    std::optional<CorrelationCell> pearson;
    std::optional<CorrelationCell> spearman;
    std::optional<CorrelationCell> kendall;
};

struct CommunityReport {
    std::string algorithm;
    int community_count = 0;
    double modularity = 0.0;
    std::vector<std::vector<std::string>> communities;
    ContingencyTable contingency;
    double chi_square_statistic = 0.0;
    int degrees_of_freedom = 0;
    double chi_square_p = 0.0;
    bool sparse_table = false;
    std::optional<double> monte_carlo_p;
};

struct TripleCountSummary {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::optional<CorrelationCell> pagerank_spearman;
    std::optional<CorrelationCell> pagerank_kendall;
    std::optional<CorrelationCell> assortativity_pearson;
    std::optional<CorrelationCell> assortativity_spearman;
    std::optional<CorrelationCell> assortativity_kendall;
};

struct AnalysisReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t undirected_edges = 0;
    bool weakly_connected = false;
    bool strongly_connected = false;

    int scc_count = 0;
    int scc_singletons = 0;
    std::vector<int> scc_nonsingleton_sizes;
    std::vector<int> scc_sizes;

    std::optional<DistanceSummary> distances;

    std::vector<DegreeTableRow> top_in_degrees;
    std::vector<DegreeTableRow> top_out_degrees;

    PowerLawSummary power_law;
    DegreeCorrelationSummary degree_correlation;

    AssortativityRow assortativity_in;
    AssortativityRow assortativity_out;
    AssortativityRow assortativity_total;

    // Populated only when vertex metadata with content labels was supplied.
    std::optional<std::vector<CommunityReport>> community_results;

    double pagerank_damping = 0.85;
    std::string dangling_policy = "uniform";
    int pagerank_iterations = 0;
    double pagerank_residual = 0.0;
    std::vector<PageRankTableRow> pagerank_table;

    // Populated only when metadata carries triple counts.
    std::optional<TripleCountSummary> triple_counts;

    AnalysisConfig config;
};

AnalysisReport run_analysis(const DirectedGraph& graph,
                            const MetadataMap* metadata,
                            const AnalysisConfig& config = AnalysisConfig{});

// Runs one detection algorithm and, when labeled metadata is supplied, the
// label significance analysis. Without labels the contingency table stays
// empty and the chi-square fields keep their defaults.
CommunityReport analyze_community(const UndirectedView& view,
                                  const MetadataMap* metadata,
                                  CommunityAlgorithm algorithm,
                                  const AnalysisConfig& config = AnalysisConfig{});

AnalysisReport run_analysis_files(const std::string& graph_path,
                                  const std::string& metadata_path,
                                  const AnalysisConfig& config = AnalysisConfig{});

const char* dangling_policy_name(DanglingPolicy policy);
std::optional<DanglingPolicy> parse_dangling_policy(std::string_view name);

// Serialization is byte stable: ordered keys, doubles rounded to 12
// significant digits, two space indent, trailing newline.
nlohmann::ordered_json report_to_json(const AnalysisReport& report);
std::string report_json_string(const AnalysisReport& report);

// Rounds through a %.12g text form so repeated serialization is idempotent.
double round_12sig(double value);

} // namespace lodcloud
