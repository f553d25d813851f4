#include "lodcloud/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"

#include "lodcloud/components.hpp"
#include "lodcloud/distances.hpp"
#include "lodcloud/errors.hpp"
#include "lodcloud/golden.hpp"
#include "lodcloud/graph.hpp"
#include "lodcloud/graph_export.hpp"
#include "lodcloud/layout.hpp"
#include "lodcloud/power_law.hpp"
#include "lodcloud/report.hpp"

namespace lodcloud {

namespace {

using nlohmann::ordered_json;

std::string fmt12(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error("cannot open output file: " + out_path);
    file << text;
    if (!file) throw Error("failed writing output file: " + out_path);
}

DirectedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    try {
        return load_edge_list(in);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

MetadataMap load_metadata_file(const std::string& path, const DirectedGraph& graph) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open metadata file: " + path);
    try {
        return load_metadata(in, graph);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

// Flags shared by the subcommands that run the analysis pipeline.
struct PipelineFlags {
    std::string graph_path;
    std::string metadata_path;
    std::string algorithm = "eigen";
    std::string dangling = "uniform";
    std::string format = "json";
    std::string out_path;
    std::string golden_path;
    double damping = 0.85;
    int walk_length = 4;
    int spins = 25;
    unsigned long long seed = 42;
    int restarts = 1;
    int mc_shuffles = 100000;
    unsigned long long mc_seed = 1009;
    unsigned long long layout_seed = 7;
    int layout_iterations = 500;
    int top = 0;
    bool directed_reachable = false;

    AnalysisConfig to_config() const {
        AnalysisConfig config;
        config.community.walk_length = walk_length;
        config.community.spins = spins;
        config.community.seed = seed;
        config.community.restarts = restarts;
        config.damping = damping;
        config.dangling_policy = *parse_dangling_policy(dangling);
        config.mc_shuffles = mc_shuffles;
        config.mc_seed = mc_seed;
        return config;
    }
};

void add_graph_flag(CLI::App* cmd, PipelineFlags& flags) {
    cmd->add_option("--graph", flags.graph_path, "Edge list file (tab separated source/target)")
        ->required();
}

void add_metadata_flag(CLI::App* cmd, PipelineFlags& flags) {
    cmd->add_option("--metadata", flags.metadata_path,
                    "Vertex metadata CSV with header id,content,triples");
}

void add_community_flags(CLI::App* cmd, PipelineFlags& flags) {
    cmd->add_option("--algorithm", flags.algorithm, "Community detection algorithm")
        ->check(CLI::IsMember({"eigen", "leading-eigenvector", "walktrap", "betweenness",
                               "girvan-newman", "edge-betweenness", "spinglass"}));
    cmd->add_option("--walk-length", flags.walk_length, "Walktrap random walk length")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--spins", flags.spins, "Spinglass spin count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags.seed, "Spinglass random seed");
    cmd->add_option("--restarts", flags.restarts, "Spinglass restarts")
        ->check(CLI::PositiveNumber);
}

void add_pagerank_flags(CLI::App* cmd, PipelineFlags& flags) {
    cmd->add_option("--damping", flags.damping, "PageRank damping factor")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--dangling-policy", flags.dangling, "Dangling vertex handling")
        ->check(CLI::IsMember({"uniform", "teleport-only"}));
}

void add_mc_flags(CLI::App* cmd, PipelineFlags& flags) {
    cmd->add_option("--mc-shuffles", flags.mc_shuffles,
                    "Monte-Carlo shuffles for sparse contingency tables")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mc-seed", flags.mc_seed, "Monte-Carlo seed");
}

void add_out_flag(CLI::App* cmd, PipelineFlags& flags) {
    cmd->add_option("--out", flags.out_path, "Write output to this file instead of stdout");
}

ordered_json community_json(const CommunityReport& entry) {
    ordered_json j;
    j["algorithm"] = entry.algorithm;
    j["community_count"] = entry.community_count;
    j["modularity"] = round_12sig(entry.modularity);
    j["communities"] = entry.communities;
    if (entry.contingency.row_labels.empty()) {
        j["contingency"] = nullptr;
        j["chi_square"] = nullptr;
        j["sparse_table"] = nullptr;
        j["monte_carlo_p"] = nullptr;
    } else {
        ordered_json counts = ordered_json::array();
        for (const auto& row : entry.contingency.counts) counts.push_back(row);
        j["contingency"] = {
            {"row_labels", entry.contingency.row_labels},
            {"community_ids", entry.contingency.column_labels},
            {"counts", counts},
        };
        j["chi_square"] = {
            {"statistic", round_12sig(entry.chi_square_statistic)},
            {"degrees_of_freedom", entry.degrees_of_freedom},
            {"p_value", round_12sig(entry.chi_square_p)},
        };
        j["sparse_table"] = entry.sparse_table;
        j["monte_carlo_p"] = entry.monte_carlo_p
                                 ? ordered_json(round_12sig(*entry.monte_carlo_p))
                                 : ordered_json(nullptr);
    }
    return j;
}

int run_analyze(const PipelineFlags& flags, std::ostream& out) {
    AnalysisReport report =
        run_analysis_files(flags.graph_path, flags.metadata_path, flags.to_config());
    write_output(report_json_string(report), flags.out_path, out);
    return 0;
}

int run_stats(const PipelineFlags& flags, std::ostream& out) {
    DirectedGraph graph = load_graph_file(flags.graph_path);
    UndirectedView view(graph);
    ComponentDecomposition scc = strongly_connected_components(graph);
    std::vector<int> sizes = scc.sizes;
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    bool weak = is_weakly_connected(graph);
    // Directed-reachable mode averages over reachable ordered pairs, so it is
    // defined even when the undirected summary is not.
    std::optional<DistanceSummary> dist;
    if (flags.directed_reachable) {
        dist = directed_distance_summary(graph);
    } else if (weak) {
        dist = distance_summary(view);
    }

    std::vector<int> degrees(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) {
        degrees[static_cast<std::size_t>(v)] = graph.degree(v, Direction::total);
    }
    std::optional<double> mle, least_squares;
    try {
        mle = fit_power_law(degrees, 1, PowerLawMethod::mle).alpha;
    } catch (const DegenerateDistributionError&) {
    }
    try {
        least_squares = fit_power_law(degrees, 1, PowerLawMethod::least_squares).alpha;
    } catch (const DegenerateDistributionError&) {
    }

    const char* distance_mode = flags.directed_reachable ? "directed-reachable" : "undirected";

    if (flags.format == "csv") {
        std::ostringstream csv;
        csv << "statistic,value\n";
        csv << "distance_mode," << distance_mode << "\n";
        csv << "vertices," << graph.vertex_count() << "\n";
        csv << "edges," << graph.edge_count() << "\n";
        csv << "undirected_edges," << view.edge_count() << "\n";
        csv << "weakly_connected," << (weak ? "true" : "false") << "\n";
        csv << "strongly_connected," << (scc.component_count() == 1 ? "true" : "false") << "\n";
        csv << "scc_count," << scc.component_count() << "\n";
        std::ostringstream size_list;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (i) size_list << " ";
            size_list << sizes[i];
        }
        csv << "scc_sizes," << csv_field(size_list.str()) << "\n";
        csv << "diameter," << (dist ? std::to_string(dist->diameter) : "") << "\n";
        csv << "average_path_length," << (dist ? fmt12(dist->average_path_length) : "") << "\n";
        csv << "power_law_mle_alpha," << (mle ? fmt12(*mle) : "") << "\n";
        csv << "power_law_least_squares_alpha," << (least_squares ? fmt12(*least_squares) : "")
            << "\n";
        write_output(csv.str(), flags.out_path, out);
        return 0;
    }

    ordered_json j;
    j["vertices"] = graph.vertex_count();
    j["edges"] = graph.edge_count();
    j["undirected_edges"] = view.edge_count();
    j["weakly_connected"] = weak;
    j["strongly_connected"] = scc.component_count() == 1;
    j["scc_count"] = scc.component_count();
    j["scc_sizes"] = sizes;
    j["distance_mode"] = distance_mode;
    j["diameter"] = dist ? ordered_json(dist->diameter) : ordered_json(nullptr);
    j["average_path_length"] =
        dist ? ordered_json(round_12sig(dist->average_path_length)) : ordered_json(nullptr);
    j["power_law"] = {
        {"x_min", 1},
        {"mle_alpha", mle ? ordered_json(round_12sig(*mle)) : ordered_json(nullptr)},
        {"least_squares_alpha",
         least_squares ? ordered_json(round_12sig(*least_squares)) : ordered_json(nullptr)},
    };
    write_output(j.dump(2) + "\n", flags.out_path, out);
    return 0;
}

int run_communities(const PipelineFlags& flags, std::ostream& out) {
    DirectedGraph graph = load_graph_file(flags.graph_path);
    std::optional<MetadataMap> metadata;
    if (!flags.metadata_path.empty()) {
        metadata = load_metadata_file(flags.metadata_path, graph);
    }
    UndirectedView view(graph);
    CommunityAlgorithm algorithm = *parse_community_algorithm(flags.algorithm);
    CommunityReport entry =
        analyze_community(view, metadata ? &*metadata : nullptr, algorithm, flags.to_config());

    if (flags.format == "csv") {
        std::unordered_map<std::string, int> assignment;
        for (std::size_t c = 0; c < entry.communities.size(); ++c) {
            for (const std::string& name : entry.communities[c]) {
                assignment[name] = static_cast<int>(c);
            }
        }
        std::ostringstream csv;
        csv << "vertex,community\n";
        for (const std::string& name : graph.vertices()) {
            csv << csv_field(name) << "," << assignment.at(name) << "\n";
        }
        write_output(csv.str(), flags.out_path, out);
        return 0;
    }

    write_output(community_json(entry).dump(2) + "\n", flags.out_path, out);
    return 0;
}

int run_pagerank(const PipelineFlags& flags, std::ostream& out) {
    DirectedGraph graph = load_graph_file(flags.graph_path);
    PageRankVector ranks = pagerank(graph, flags.damping, 1e-12, 200,
                                    *parse_dangling_policy(flags.dangling));
    int k = flags.top > 0 ? std::min(flags.top, graph.vertex_count()) : graph.vertex_count();
    auto rows = top_k_central(graph, ranks, k);

    if (flags.format == "csv") {
        std::ostringstream csv;
        csv << "vertex,score\n";
        for (const auto& [name, score] : rows) {
            csv << csv_field(name) << "," << fmt12(score) << "\n";
        }
        write_output(csv.str(), flags.out_path, out);
        return 0;
    }

    ordered_json table = ordered_json::array();
    for (const auto& [name, score] : rows) {
        table.push_back({{"vertex", name}, {"score", round_12sig(score)}});
    }
    ordered_json j;
    j["damping"] = round_12sig(flags.damping);
    j["dangling_policy"] = flags.dangling;
    j["iterations"] = ranks.iterations_used;
    j["residual"] = round_12sig(ranks.residual);
    j["table"] = std::move(table);
    write_output(j.dump(2) + "\n", flags.out_path, out);
    return 0;
}

int run_export(const PipelineFlags& flags, std::ostream& out) {
    DirectedGraph graph = load_graph_file(flags.graph_path);
    std::optional<MetadataMap> metadata;
    if (!flags.metadata_path.empty()) {
        metadata = load_metadata_file(flags.metadata_path, graph);
    }
    UndirectedView view(graph);
    AnalysisConfig config = flags.to_config();
    Partition partition =
        detect_communities(view, *parse_community_algorithm(flags.algorithm), config.community);
    PageRankVector ranks =
        pagerank(graph, flags.damping, 1e-12, 200, *parse_dangling_policy(flags.dangling));
    LayoutResult layout =
        layout_fruchterman_reingold(view, flags.layout_iterations, flags.layout_seed);
    ExportFormat format = flags.format == "graphml" ? ExportFormat::graphml : ExportFormat::dot;
    std::string text = export_graph(graph, &partition, &ranks, &layout,
                                    metadata ? &*metadata : nullptr, format);
    write_output(text, flags.out_path, out);
    return 0;
}

int run_validate(const PipelineFlags& flags, std::ostream& out) {
    AnalysisReport report =
        run_analysis_files(flags.graph_path, flags.metadata_path, flags.to_config());
    GoldenFixture fixture = flags.golden_path.empty() ? GoldenFixture::bundled()
                                                      : GoldenFixture::from_file(flags.golden_path);
    std::vector<Discrepancy> discrepancies = validate(report, fixture);

    std::ostringstream text;
    for (const Discrepancy& d : discrepancies) {
        text << "DISCREPANCY " << d.provenance << ": expected " << d.expected << ", actual "
             << d.actual << "\n";
    }
    text << discrepancies.size() << " discrepanc" << (discrepancies.size() == 1 ? "y" : "ies")
         << "\n";
    out << text.str();

    if (!flags.out_path.empty()) {
        ordered_json list = ordered_json::array();
        for (const Discrepancy& d : discrepancies) {
            list.push_back({{"provenance", d.provenance},
                            {"expected", d.expected},
                            {"actual", d.actual}});
        }
        write_output(list.dump(2) + "\n", flags.out_path, out);
    }
    return discrepancies.empty() ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structural analysis toolkit for dataset-linkage graphs"};
    app.require_subcommand(1);

    PipelineFlags flags;

    CLI::App* analyze = app.add_subcommand("analyze", "Run the full analysis pipeline");
    add_graph_flag(analyze, flags);
    add_metadata_flag(analyze, flags);
    add_community_flags(analyze, flags);
    add_pagerank_flags(analyze, flags);
    add_mc_flags(analyze, flags);
    add_out_flag(analyze, flags);
    analyze->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json"}));

    CLI::App* communities = app.add_subcommand("communities", "Detect structural communities");
    add_graph_flag(communities, flags);
    add_metadata_flag(communities, flags);
    add_community_flags(communities, flags);
    add_mc_flags(communities, flags);
    add_out_flag(communities, flags);
    communities->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* pagerank_cmd = app.add_subcommand("pagerank", "Compute PageRank centrality");
    add_graph_flag(pagerank_cmd, flags);
    add_pagerank_flags(pagerank_cmd, flags);
    add_out_flag(pagerank_cmd, flags);
    pagerank_cmd->add_option("--top", flags.top, "Keep only the top N rows")
        ->check(CLI::PositiveNumber);
    pagerank_cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* stats = app.add_subcommand("stats", "Connectivity and degree statistics");
    add_graph_flag(stats, flags);
    add_out_flag(stats, flags);
    stats->add_flag("--directed-reachable", flags.directed_reachable,
                    "Average distances over directed reachable ordered pairs");
    stats->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* export_cmd = app.add_subcommand("export", "Render the graph to DOT or GraphML");
    add_graph_flag(export_cmd, flags);
    add_metadata_flag(export_cmd, flags);
    add_community_flags(export_cmd, flags);
    add_pagerank_flags(export_cmd, flags);
    add_out_flag(export_cmd, flags);
    export_cmd->add_option("--layout-seed", flags.layout_seed, "Layout random seed");
    export_cmd->add_option("--iterations", flags.layout_iterations, "Layout iterations")
        ->check(CLI::PositiveNumber);
    export_cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"dot", "graphml"}));

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Compare a computed report against a golden fixture");
    add_graph_flag(validate_cmd, flags);
    add_metadata_flag(validate_cmd, flags);
    add_community_flags(validate_cmd, flags);
    add_pagerank_flags(validate_cmd, flags);
    add_mc_flags(validate_cmd, flags);
    add_out_flag(validate_cmd, flags);
    validate_cmd->add_option("--golden", flags.golden_path,
                             "Fixture JSON path (defaults to the bundled fixture)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lodcloud");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    // Export defaults to DOT; every other subcommand defaults to JSON.
    if (export_cmd->parsed() && flags.format == "json") flags.format = "dot";

    try {
        if (analyze->parsed()) return run_analyze(flags, out);
        if (communities->parsed()) return run_communities(flags, out);
        if (pagerank_cmd->parsed()) return run_pagerank(flags, out);
        if (stats->parsed()) return run_stats(flags, out);
        if (export_cmd->parsed()) return run_export(flags, out);
        if (validate_cmd->parsed()) return run_validate(flags, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand given\n";
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace lodcloud
