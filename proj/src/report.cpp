#include "lodcloud/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <utility>

#include "lodcloud/chi_square.hpp"
#include "lodcloud/components.hpp"
#include "lodcloud/degree_stats.hpp"
#include "lodcloud/errors.hpp"
#include "lodcloud/power_law.hpp"

namespace lodcloud {

namespace {

std::optional<CorrelationCell> to_cell(const CorrelationResult& result) {
    CorrelationCell cell;
    cell.coefficient = result.coefficient;
    cell.p_value = result.p_value;
    cell.n = result.n;
    return cell;
}

// Degenerate inputs (constant degrees, too few points) leave the cell empty
// instead of aborting the whole report.
template <typename Fn>
std::optional<CorrelationCell> try_cell(Fn&& fn) {
    try {
        return to_cell(fn());
    } catch (const ZeroVarianceError&) {
        return std::nullopt;
    } catch (const TooFewSamplesError&) {
        return std::nullopt;
    } catch (const TooFewEdgesError&) {
        return std::nullopt;
    } catch (const DegenerateDistributionError&) {
        return std::nullopt;
    }
}

AssortativityRow assortativity_row(const DirectedGraph& graph, Direction direction) {
    AssortativityRow row;
    row.pearson = try_cell([&] { return assortativity(graph, direction, CorrelationMethod::pearson); });
    row.spearman = try_cell([&] { return assortativity(graph, direction, CorrelationMethod::spearman); });
    row.kendall = try_cell([&] { return assortativity(graph, direction, CorrelationMethod::kendall); });
    return row;
}

std::vector<DegreeTableRow> top_degrees(const DirectedGraph& graph,
                                        Direction direction, int k) {
    std::vector<DegreeTableRow> rows;
    rows.reserve(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) {
        rows.push_back({graph.vertex_name(v), graph.degree(v, direction)});
    }
    std::sort(rows.begin(), rows.end(), [](const DegreeTableRow& a, const DegreeTableRow& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.vertex < b.vertex;
    });
    if (static_cast<int>(rows.size()) > k) rows.resize(static_cast<std::size_t>(k));
    return rows;
}

nlohmann::ordered_json json_correlation(const std::optional<CorrelationCell>& cell) {
    if (!cell) return nullptr;
    nlohmann::ordered_json j;
    j["coefficient"] = round_12sig(cell->coefficient);
    j["p_value"] = cell->p_value ? nlohmann::ordered_json(round_12sig(*cell->p_value))
                                 : nlohmann::ordered_json(nullptr);
    j["n"] = cell->n;
    return j;
}

nlohmann::ordered_json json_assortativity_row(const AssortativityRow& row) {
    nlohmann::ordered_json j;
    j["pearson"] = json_correlation(row.pearson);
    j["spearman"] = json_correlation(row.spearman);
    j["kendall"] = json_correlation(row.kendall);
    return j;
}

} // namespace

const char* dangling_policy_name(DanglingPolicy policy) {
    return policy == DanglingPolicy::uniform ? "uniform" : "teleport-only";
}

std::optional<DanglingPolicy> parse_dangling_policy(std::string_view name) {
    if (name == "uniform") return DanglingPolicy::uniform;
    if (name == "teleport-only" || name == "teleport_only") return DanglingPolicy::teleport_only;
    return std::nullopt;
}

double round_12sig(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return std::strtod(buffer, nullptr);
}

CommunityReport analyze_community(const UndirectedView& view,
                                  const MetadataMap* metadata,
                                  CommunityAlgorithm algorithm,
                                  const AnalysisConfig& config) {
    CommunityReport entry;
    entry.algorithm = community_algorithm_name(algorithm);
    Partition partition = detect_communities(view, algorithm, config.community);
    entry.community_count = partition.community_count;
    entry.modularity = modularity(view, partition);
    entry.communities.assign(static_cast<std::size_t>(partition.community_count), {});
    for (int v = 0; v < view.vertex_count(); ++v) {
        entry.communities[static_cast<std::size_t>(partition.assignment[static_cast<std::size_t>(v)])]
            .push_back(view.base().vertex_name(v));
    }

    bool has_labels = false;
    if (metadata) {
        for (const VertexMetadata& record : *metadata) {
            if (record.content_label) has_labels = true;
        }
    }
    if (has_labels) {
        entry.contingency = contingency_table(partition, *metadata);
        ChiSquareResult chi = chi_square_independence(entry.contingency.counts);
        entry.chi_square_statistic = chi.statistic;
        entry.degrees_of_freedom = chi.degrees_of_freedom;
        entry.chi_square_p = chi.p_value;
        entry.sparse_table = expected_below_five_fraction(entry.contingency.counts) > 0.2;
        if (entry.sparse_table) {
            ChiSquareResult mc = chi_square_monte_carlo(entry.contingency.counts,
                                                        config.mc_shuffles, config.mc_seed);
            entry.monte_carlo_p = mc.p_value;
        }
    }
    return entry;
}

AnalysisReport run_analysis(const DirectedGraph& graph,
                            const MetadataMap* metadata,
                            const AnalysisConfig& config) {
    AnalysisReport report;
    report.config = config;

    report.vertices = static_cast<std::size_t>(graph.vertex_count());
    report.edges = static_cast<std::size_t>(graph.edge_count());
    UndirectedView view(graph);
    report.undirected_edges = static_cast<std::size_t>(view.edge_count());
    report.weakly_connected = is_weakly_connected(graph);

    ComponentDecomposition scc = strongly_connected_components(graph);
    report.scc_count = scc.component_count();
    report.strongly_connected = scc.component_count() == 1;
    report.scc_sizes = scc.sizes;
    std::sort(report.scc_sizes.begin(), report.scc_sizes.end(), std::greater<int>());
    for (int size : report.scc_sizes) {
        if (size == 1) {
            ++report.scc_singletons;
        } else {
            report.scc_nonsingleton_sizes.push_back(size);
        }
    }

    if (report.weakly_connected) {
        report.distances = distance_summary(view);
    }

    report.top_in_degrees = top_degrees(graph, Direction::in, config.degree_table_k);
    report.top_out_degrees = top_degrees(graph, Direction::out, config.degree_table_k);

    std::vector<int> total_degrees(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) {
        total_degrees[static_cast<std::size_t>(v)] = graph.degree(v, Direction::total);
    }
    report.power_law.x_min = config.power_law_x_min;
    try {
        report.power_law.mle_alpha =
            fit_power_law(total_degrees, config.power_law_x_min, PowerLawMethod::mle).alpha;
    } catch (const DegenerateDistributionError&) {
    }
    try {
        report.power_law.least_squares_alpha =
            fit_power_law(total_degrees, config.power_law_x_min, PowerLawMethod::least_squares).alpha;
    } catch (const DegenerateDistributionError&) {
    }

    {
        std::vector<double> in_degrees, out_degrees;
        in_degrees.reserve(report.vertices);
        out_degrees.reserve(report.vertices);
        for (int v = 0; v < graph.vertex_count(); ++v) {
            in_degrees.push_back(graph.degree(v, Direction::in));
            out_degrees.push_back(graph.degree(v, Direction::out));
        }
        report.degree_correlation.spearman =
            try_cell([&] { return correlate(in_degrees, out_degrees, CorrelationMethod::spearman); });
        report.degree_correlation.kendall =
            try_cell([&] { return correlate(in_degrees, out_degrees, CorrelationMethod::kendall); });

        int best = 0;
        for (int v = 1; v < graph.vertex_count(); ++v) {
            int dv = graph.degree(v, Direction::in);
            int db = graph.degree(best, Direction::in);
            if (dv > db || (dv == db && graph.vertex_name(v) < graph.vertex_name(best))) {
                best = v;
            }
        }
        report.degree_correlation.max_in_degree_vertex = graph.vertex_name(best);
        report.degree_correlation.max_in_degree_total_degree = graph.degree(best, Direction::total);
        for (int u : view.neighbors(best)) {
            report.degree_correlation.max_in_degree_neighbor_total_degrees.push_back(
                graph.degree(u, Direction::total));
        }
        std::sort(report.degree_correlation.max_in_degree_neighbor_total_degrees.begin(),
                  report.degree_correlation.max_in_degree_neighbor_total_degrees.end());
    }

    report.assortativity_in = assortativity_row(graph, Direction::in);
    report.assortativity_out = assortativity_row(graph, Direction::out);
    report.assortativity_total = assortativity_row(graph, Direction::total);

    bool has_labels = false;
    bool has_triples = false;
    if (metadata) {
        for (const VertexMetadata& record : *metadata) {
            if (record.content_label) has_labels = true;
            if (record.triple_count) has_triples = true;
        }
    }

    if (has_labels) {
        std::vector<CommunityReport> entries;
        entries.push_back(analyze_community(view, metadata, CommunityAlgorithm::girvan_newman, config));
        entries.push_back(analyze_community(view, metadata, CommunityAlgorithm::leading_eigenvector, config));
        entries.push_back(analyze_community(view, metadata, CommunityAlgorithm::walktrap, config));
        entries.push_back(analyze_community(view, metadata, CommunityAlgorithm::spinglass, config));
        report.community_results = std::move(entries);
    }

    PageRankVector ranks = pagerank(graph, config.damping, config.pagerank_tolerance,
                                    config.pagerank_max_iterations, config.dangling_policy);
    report.pagerank_damping = config.damping;
    report.dangling_policy = dangling_policy_name(config.dangling_policy);
    report.pagerank_iterations = ranks.iterations_used;
    report.pagerank_residual = ranks.residual;
    int table_k = std::min(config.pagerank_table_k, graph.vertex_count());
    for (const auto& [name, score] : top_k_central(graph, ranks, table_k)) {
        report.pagerank_table.push_back({name, score});
    }

    if (has_triples) {
        TripleCountSummary triples;
        std::vector<std::optional<double>> attribute(report.vertices);
        std::set<std::string> annotated;
        for (int v = 0; v < graph.vertex_count(); ++v) {
            const VertexMetadata& record = (*metadata)[static_cast<std::size_t>(v)];
            if (record.triple_count) {
                attribute[static_cast<std::size_t>(v)] = static_cast<double>(*record.triple_count);
                annotated.insert(graph.vertex_name(v));
            }
        }
        DirectedGraph annotated_subgraph = induced_subgraph(graph, annotated);
        triples.vertices = static_cast<std::size_t>(annotated_subgraph.vertex_count());
        triples.edges = static_cast<std::size_t>(annotated_subgraph.edge_count());
        triples.pagerank_spearman = try_cell([&] {
            return centrality_attribute_correlation(ranks, attribute, CorrelationMethod::spearman);
        });
        triples.pagerank_kendall = try_cell([&] {
            return centrality_attribute_correlation(ranks, attribute, CorrelationMethod::kendall);
        });
        triples.assortativity_pearson = try_cell([&] {
            return attribute_assortativity(graph, attribute, CorrelationMethod::pearson);
        });
        triples.assortativity_spearman = try_cell([&] {
            return attribute_assortativity(graph, attribute, CorrelationMethod::spearman);
        });
        triples.assortativity_kendall = try_cell([&] {
            return attribute_assortativity(graph, attribute, CorrelationMethod::kendall);
        });
        report.triple_counts = std::move(triples);
    }

    return report;
}

AnalysisReport run_analysis_files(const std::string& graph_path,
                                  const std::string& metadata_path,
                                  const AnalysisConfig& config) {
    std::ifstream graph_stream(graph_path);
    if (!graph_stream) throw Error("cannot open graph file: " + graph_path);
    DirectedGraph graph = [&] {
        try {
            return load_edge_list(graph_stream);
        } catch (const Error& e) {
            throw Error(graph_path + ": " + e.what());
        }
    }();

    if (metadata_path.empty()) {
        return run_analysis(graph, nullptr, config);
    }
    std::ifstream metadata_stream(metadata_path);
    if (!metadata_stream) throw Error("cannot open metadata file: " + metadata_path);
    MetadataMap metadata = [&] {
        try {
            return load_metadata(metadata_stream, graph);
        } catch (const Error& e) {
            throw Error(metadata_path + ": " + e.what());
        }
    }();
    return run_analysis(graph, &metadata, config);
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
    nlohmann::ordered_json j;

    j["graph_summary"] = {
        {"vertices", report.vertices},
        {"edges", report.edges},
        {"undirected_edges", report.undirected_edges},
        {"weakly_connected", report.weakly_connected},
        {"strongly_connected", report.strongly_connected},
    };

    j["scc_summary"] = {
        {"component_count", report.scc_count},
        {"singleton_count", report.scc_singletons},
        {"nonsingleton_sizes", report.scc_nonsingleton_sizes},
        {"sizes", report.scc_sizes},
    };

    if (report.distances) {
        j["distance_summary"] = {
            {"diameter", report.distances->diameter},
            {"average_path_length", round_12sig(report.distances->average_path_length)},
            {"pair_count", report.distances->pair_count},
        };
    } else {
        j["distance_summary"] = nullptr;
    }

    auto degree_rows = [](const std::vector<DegreeTableRow>& rows) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const DegreeTableRow& row : rows) {
            list.push_back({{"vertex", row.vertex}, {"degree", row.degree}});
        }
        return list;
    };
    j["degree_tables"] = {
        {"in", degree_rows(report.top_in_degrees)},
        {"out", degree_rows(report.top_out_degrees)},
    };

    j["power_law"] = {
        {"x_min", report.power_law.x_min},
        {"mle_alpha", report.power_law.mle_alpha
                          ? nlohmann::ordered_json(round_12sig(*report.power_law.mle_alpha))
                          : nlohmann::ordered_json(nullptr)},
        {"least_squares_alpha",
         report.power_law.least_squares_alpha
             ? nlohmann::ordered_json(round_12sig(*report.power_law.least_squares_alpha))
             : nlohmann::ordered_json(nullptr)},
    };

    j["degree_correlation"] = {
        {"spearman", json_correlation(report.degree_correlation.spearman)},
        {"kendall", json_correlation(report.degree_correlation.kendall)},
        {"max_in_degree_vertex", report.degree_correlation.max_in_degree_vertex},
        {"max_in_degree_total_degree", report.degree_correlation.max_in_degree_total_degree},
        {"max_in_degree_neighbor_total_degrees",
         report.degree_correlation.max_in_degree_neighbor_total_degrees},
    };

    j["assortativity_table"] = {
        {"in", json_assortativity_row(report.assortativity_in)},
        {"out", json_assortativity_row(report.assortativity_out)},
        {"total", json_assortativity_row(report.assortativity_total)},
    };

    if (report.community_results) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const CommunityReport& entry : *report.community_results) {
            nlohmann::ordered_json e;
            e["algorithm"] = entry.algorithm;
            e["community_count"] = entry.community_count;
            e["modularity"] = round_12sig(entry.modularity);
            e["communities"] = entry.communities;
            nlohmann::ordered_json counts = nlohmann::ordered_json::array();
            for (const auto& row : entry.contingency.counts) counts.push_back(row);
            e["contingency"] = {
                {"row_labels", entry.contingency.row_labels},
                {"community_ids", entry.contingency.column_labels},
                {"counts", counts},
            };
            e["chi_square"] = {
                {"statistic", round_12sig(entry.chi_square_statistic)},
                {"degrees_of_freedom", entry.degrees_of_freedom},
                {"p_value", round_12sig(entry.chi_square_p)},
            };
            e["sparse_table"] = entry.sparse_table;
            e["monte_carlo_p"] = entry.monte_carlo_p
                                     ? nlohmann::ordered_json(round_12sig(*entry.monte_carlo_p))
                                     : nlohmann::ordered_json(nullptr);
            list.push_back(std::move(e));
        }
        j["community_results"] = std::move(list);
    } else {
        j["community_results"] = nullptr;
    }

    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const PageRankTableRow& row : report.pagerank_table) {
        table.push_back({{"vertex", row.vertex}, {"score", round_12sig(row.score)}});
    }
    j["pagerank"] = {
        {"damping", round_12sig(report.pagerank_damping)},
        {"dangling_policy", report.dangling_policy},
        {"iterations", report.pagerank_iterations},
        {"residual", round_12sig(report.pagerank_residual)},
        {"table", std::move(table)},
    };

    if (report.triple_counts) {
        j["triple_count_correlations"] = {
            {"vertices", report.triple_counts->vertices},
            {"edges", report.triple_counts->edges},
            {"pagerank_spearman", json_correlation(report.triple_counts->pagerank_spearman)},
            {"pagerank_kendall", json_correlation(report.triple_counts->pagerank_kendall)},
            {"assortativity_pearson", json_correlation(report.triple_counts->assortativity_pearson)},
            {"assortativity_spearman", json_correlation(report.triple_counts->assortativity_spearman)},
            {"assortativity_kendall", json_correlation(report.triple_counts->assortativity_kendall)},
        };
    } else {
        j["triple_count_correlations"] = nullptr;
    }

    j["parameters"] = {
        {"spinglass_seed", report.config.community.seed},
        {"spins", report.config.community.spins},
        {"gamma", round_12sig(report.config.community.gamma)},
        {"walk_length", report.config.community.walk_length},
        {"restarts", report.config.community.restarts},
        {"damping", round_12sig(report.config.damping)},
        {"pagerank_tolerance", round_12sig(report.config.pagerank_tolerance)},
        {"pagerank_max_iterations", report.config.pagerank_max_iterations},
        {"dangling_policy", dangling_policy_name(report.config.dangling_policy)},
        {"degree_table_k", report.config.degree_table_k},
        {"pagerank_table_k", report.config.pagerank_table_k},
        {"power_law_x_min", report.config.power_law_x_min},
        {"mc_shuffles", report.config.mc_shuffles},
        {"mc_seed", report.config.mc_seed},
    };

    return j;
}

std::string report_json_string(const AnalysisReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

} // namespace lodcloud
