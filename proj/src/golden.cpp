#include "lodcloud/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lodcloud/errors.hpp"

namespace lodcloud {

namespace {

using nlohmann::ordered_json;

constexpr const char* kBundledFixture = R"json({
  "fixture": "lod-cloud-2009",
  "description": "Published aggregate statistics for the March 2009 Linked Data cloud graph",
  "table1": {
    "provenance": "Table I",
    "vertices": 86,
    "edges": 274,
    "weakly_connected": true,
    "strongly_connected": false,
    "diameter": 10,
    "average_path_length": 3.916
  },
  "scc": {
    "provenance": "connectivity analysis",
    "component_count": 31,
    "singleton_count": 26,
    "nonsingleton_sizes": [37, 15, 4, 2, 2]
  },
  "top_in_degrees": {
    "provenance": "Table II",
    "rows": [
      ["DBpedia", 14],
      ["DBLP RKB Explorer", 13],
      ["ACM", 10],
      ["GeneID", 10],
      ["GeoNames", 10],
      ["CiteSeer", 9],
      ["ePrints", 9],
      ["UniProt", 9],
      ["ECS Southampton", 8],
      ["FOAF Profiles", 7],
      ["RAE 2001", 7]
    ]
  },
  "top_out_degrees": {
    "provenance": "Table III",
    "rows": [
      ["DBpedia", 17],
      ["DBLP RKB Explorer", 14],
      ["ACM", 10],
      ["CiteSeer", 9],
      ["EPrints", 9],
      ["GeneID", 8],
      ["UniProt", 8],
      ["DrugBank", 7],
      ["ECS Southampton", 7],
      ["FOAF Profiles", 7],
      ["RAE 2001", 7]
    ]
  },
  "power_law_alpha": {
    "provenance": "degree distribution analysis",
    "value": 1.496
  },
  "degree_correlation": {
    "provenance": "degree correlation analysis",
    "spearman": { "value": 0.6753, "p_bound": 9.85e-13 },
    "kendall": { "value": 0.5640, "p_bound": 7.27e-12 }
  },
  "max_in_degree_neighbors": {
    "provenance": "degree correlation analysis",
    "vertex": "DBpedia",
    "neighbor_total_degrees": [1, 1, 2, 3, 3, 3, 3, 3, 4, 4, 4, 6, 8, 9, 11, 12, 12, 18]
  },
  "assortativity": {
    "provenance": "Table IV",
    "in": {
      "pearson": { "value": -0.1911, "p": 0.0015 },
      "spearman": { "value": -0.1319, "p": 0.0292 },
      "kendall": { "value": -0.0933, "p": 0.0346 }
    },
    "out": {
      "pearson": { "value": -0.1728, "p": 0.0042 },
      "spearman": { "value": -0.0311, "p": 0.6089 },
      "kendall": { "value": -0.0193, "p": 0.6626 }
    },
    "total": {
      "pearson": { "value": -0.1868, "p": 0.0019 },
      "spearman": { "value": -0.0629, "p": 0.2998 },
      "kendall": { "value": -0.0364, "p": 0.3982 }
    }
  },
  "chi_square_p": {
    "provenance": "Table VI",
    "leading-eigenvector": { "p": 6.6e-12, "floor": false },
    "walktrap": { "p": 2.2e-16, "floor": true },
    "girvan-newman": { "p": 0.0323, "floor": false },
    "spinglass": { "p": 2.4e-16, "floor": true }
  },
  "community_sample": {
    "provenance": "community structure sample",
    "reference_only": true,
    "algorithm": "leading-eigenvector",
    "rows": [
      ["SurgeRadio", 0, "music"],
      ["MusicBrainz", 0, "music"],
      ["DBpedia", 0, "general"],
      ["Riese", 5, "government"],
      ["LinkedCT", 3, "medicine"],
      ["World Fact Book", 5, "government"],
      ["OpenCyc", 0, "general"],
      ["Yago", 0, "general"],
      ["DrugBank", 3, "medicine"],
      ["DailyMed", 3, "medicine"],
      ["UniParc", 2, "biology"],
      ["Reactome", 9, "biology"],
      ["ACM", 1, "computer science"],
      ["CiteSeer", 1, "computer science"],
      ["IEEE", 1, "computer science"]
    ]
  },
  "pagerank_top": {
    "provenance": "Table VII",
    "rows": [
      ["DBLP Berlin", 0.0484],
      ["DBLP Hannover", 0.0464],
      ["DBpedia", 0.0384],
      ["KEGG", 0.0370],
      ["UniProt", 0.0357],
      ["GeneID", 0.0346],
      ["DBLP RKB Explorer", 0.0341],
      ["GeoNames", 0.0294],
      ["ACM", 0.0257],
      ["Pfam", 0.0254],
      ["Prosite", 0.0233],
      ["ePrints", 0.0218],
      ["CiteSeer", 0.0218],
      ["PDB", 0.0209]
    ]
  },
  "triple_subgraph": {
    "provenance": "triple count analysis",
    "vertices": 31,
    "edges": 56
  },
  "triple_pagerank_correlation": {
    "provenance": "triple count analysis",
    "spearman": { "value": 0.6274, "p_bound": 0.00016 },
    "kendall": { "value": 0.4566, "p_bound": 0.00039 }
  },
  "triple_assortativity": {
    "provenance": "Table VIII",
    "pearson": { "value": 0.0682, "p": 0.3230 },
    "spearman": { "value": -0.2546, "p": 0.0559 },
    "kendall": { "value": -0.2064, "p": 0.0302 }
  }
})json";

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string fmt_int(long long value) { return std::to_string(value); }

template <typename T>
std::string fmt_list(const std::vector<T>& values) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << values[i];
    }
    out << "]";
    return out.str();
}

double clamped_log10(double p) { return std::log10(std::max(p, 1e-300)); }

struct Checker {
    std::vector<Discrepancy> list;
    const ValidationTolerances& tol;

    explicit Checker(const ValidationTolerances& tolerances) : tol(tolerances) {}

    void add(std::string provenance, std::string expected, std::string actual) {
        list.push_back({std::move(provenance), std::move(expected), std::move(actual)});
    }

    void check_int(const std::string& provenance, long long expected, long long actual) {
        if (expected != actual) add(provenance, fmt_int(expected), fmt_int(actual));
    }

    void check_bool(const std::string& provenance, bool expected, bool actual) {
        if (expected != actual) {
            add(provenance, expected ? "true" : "false", actual ? "true" : "false");
        }
    }

    void check_real(const std::string& provenance, double expected, double actual,
                    double tolerance) {
        if (std::abs(expected - actual) > tolerance) {
            add(provenance, fmt(expected), fmt(actual));
        }
    }

    void check_p(const std::string& provenance, double expected, double actual) {
        if (std::abs(clamped_log10(expected) - clamped_log10(actual)) > tol.log10_p) {
            add(provenance, fmt(expected), fmt(actual));
        }
    }

    // Published only as an upper bound, so the comparison is one sided.
    void check_p_bound(const std::string& provenance, double bound, double actual) {
        if (clamped_log10(actual) > clamped_log10(bound) + tol.log10_p) {
            add(provenance, "p < " + fmt(bound), fmt(actual));
        }
    }

    void check_correlation(const ordered_json& expected, const std::string& provenance,
                           const std::optional<CorrelationCell>& cell) {
        if (expected.contains("value")) {
            double value = expected.at("value").get<double>();
            if (!cell) {
                add(provenance, fmt(value), "absent");
            } else {
                check_real(provenance, value, cell->coefficient, tol.correlation);
            }
        }
        if (expected.contains("p")) {
            double p = expected.at("p").get<double>();
            if (!cell || !cell->p_value) {
                add(provenance + " p-value", fmt(p), "absent");
            } else {
                check_p(provenance + " p-value", p, *cell->p_value);
            }
        }
        if (expected.contains("p_bound")) {
            double bound = expected.at("p_bound").get<double>();
            if (!cell || !cell->p_value) {
                add(provenance + " p-value", "p < " + fmt(bound), "absent");
            } else {
                check_p_bound(provenance + " p-value", bound, *cell->p_value);
            }
        }
    }
};

const std::optional<CorrelationCell>* row_cell(const AssortativityRow& row,
                                               const std::string& method) {
    if (method == "pearson") return &row.pearson;
    if (method == "spearman") return &row.spearman;
    if (method == "kendall") return &row.kendall;
    return nullptr;
}

ordered_json correlation_fixture_entry(const std::optional<CorrelationCell>& cell) {
    ordered_json j;
    if (cell) {
        j["value"] = cell->coefficient;
        if (cell->p_value) j["p"] = *cell->p_value;
    }
    return j;
}

} // namespace

GoldenFixture GoldenFixture::bundled() {
    return from_json(ordered_json::parse(kBundledFixture));
}

GoldenFixture GoldenFixture::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file: " + path);
    ordered_json data;
    try {
        in >> data;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
    return from_json(std::move(data));
}

GoldenFixture GoldenFixture::from_json(ordered_json data) {
    if (!data.is_object()) throw Error("fixture root must be a JSON object");
    GoldenFixture fixture;
    fixture.data_ = std::move(data);
    return fixture;
}

std::vector<Discrepancy> validate(const AnalysisReport& report,
                                  const GoldenFixture& fixture,
                                  const ValidationTolerances& tolerances) {
    Checker checker(tolerances);
    const ordered_json& fx = fixture.data();

    if (fx.contains("table1")) {
        const ordered_json& t = fx.at("table1");
        if (t.contains("vertices")) {
            checker.check_int("Table I vertices", t.at("vertices").get<long long>(),
                              static_cast<long long>(report.vertices));
        }
        if (t.contains("edges")) {
            checker.check_int("Table I edges", t.at("edges").get<long long>(),
                              static_cast<long long>(report.edges));
        }
        if (t.contains("weakly_connected")) {
            checker.check_bool("Table I weakly connected", t.at("weakly_connected").get<bool>(),
                               report.weakly_connected);
        }
        if (t.contains("strongly_connected")) {
            checker.check_bool("Table I strongly connected",
                               t.at("strongly_connected").get<bool>(), report.strongly_connected);
        }
        if (t.contains("diameter")) {
            long long expected = t.at("diameter").get<long long>();
            if (!report.distances) {
                checker.add("Table I diameter", fmt_int(expected), "absent");
            } else {
                checker.check_int("Table I diameter", expected, report.distances->diameter);
            }
        }
        if (t.contains("average_path_length")) {
            double expected = t.at("average_path_length").get<double>();
            if (!report.distances) {
                checker.add("Table I average path length", fmt(expected), "absent");
            } else {
                checker.check_real("Table I average path length", expected,
                                   report.distances->average_path_length,
                                   tolerances.summary_real);
            }
        }
    }

    if (fx.contains("scc")) {
        const ordered_json& s = fx.at("scc");
        if (s.contains("component_count")) {
            checker.check_int("connectivity analysis SCC count",
                              s.at("component_count").get<long long>(), report.scc_count);
        }
        if (s.contains("singleton_count")) {
            checker.check_int("connectivity analysis SCC singleton count",
                              s.at("singleton_count").get<long long>(), report.scc_singletons);
        }
        if (s.contains("nonsingleton_sizes")) {
            std::vector<int> expected = s.at("nonsingleton_sizes").get<std::vector<int>>();
            if (expected != report.scc_nonsingleton_sizes) {
                checker.add("connectivity analysis SCC sizes", fmt_list(expected),
                            fmt_list(report.scc_nonsingleton_sizes));
            }
        }
    }

    auto check_degree_table = [&](const char* key, const char* table_name,
                                  const char* degree_name,
                                  const std::vector<DegreeTableRow>& rows) {
        if (!fx.contains(key)) return;
        const ordered_json& block = fx.at(key);
        if (!block.contains("rows")) return;
        for (const ordered_json& row : block.at("rows")) {
            std::string name = row.at(0).get<std::string>();
            long long degree = row.at(1).get<long long>();
            std::string provenance = std::string(table_name) + " row '" + name + "'";
            auto it = std::find_if(rows.begin(), rows.end(), [&](const DegreeTableRow& r) {
                return r.vertex == name;
            });
            if (it == rows.end()) {
                checker.add(provenance, std::string(degree_name) + " " + fmt_int(degree),
                            "absent from top table");
            } else if (it->degree != degree) {
                checker.add(provenance, std::string(degree_name) + " " + fmt_int(degree),
                            std::string(degree_name) + " " + fmt_int(it->degree));
            }
        }
    };
    check_degree_table("top_in_degrees", "Table II", "in-degree", report.top_in_degrees);
    check_degree_table("top_out_degrees", "Table III", "out-degree", report.top_out_degrees);

    if (fx.contains("power_law_alpha") && fx.at("power_law_alpha").contains("value")) {
        double expected = fx.at("power_law_alpha").at("value").get<double>();
        const PowerLawSummary& pl = report.power_law;
        bool mle_ok = pl.mle_alpha && std::abs(*pl.mle_alpha - expected) <= tolerances.alpha;
        bool ls_ok = pl.least_squares_alpha &&
                     std::abs(*pl.least_squares_alpha - expected) <= tolerances.alpha;
        if (!mle_ok && !ls_ok) {
            std::string actual;
            if (pl.mle_alpha) actual += "mle " + fmt(*pl.mle_alpha);
            if (pl.least_squares_alpha) {
                if (!actual.empty()) actual += ", ";
                actual += "least squares " + fmt(*pl.least_squares_alpha);
            }
            if (actual.empty()) actual = "absent";
            checker.add("degree distribution analysis alpha", fmt(expected), actual);
        }
    }

    if (fx.contains("degree_correlation")) {
        const ordered_json& block = fx.at("degree_correlation");
        if (block.contains("spearman")) {
            checker.check_correlation(block.at("spearman"),
                                      "degree correlation analysis spearman",
                                      report.degree_correlation.spearman);
        }
        if (block.contains("kendall")) {
            checker.check_correlation(block.at("kendall"),
                                      "degree correlation analysis kendall",
                                      report.degree_correlation.kendall);
        }
    }

    if (fx.contains("max_in_degree_neighbors")) {
        const ordered_json& block = fx.at("max_in_degree_neighbors");
        if (block.contains("vertex")) {
            std::string expected = block.at("vertex").get<std::string>();
            if (expected != report.degree_correlation.max_in_degree_vertex) {
                checker.add("degree correlation analysis max in-degree vertex", expected,
                            report.degree_correlation.max_in_degree_vertex);
            }
        }
        if (block.contains("neighbor_total_degrees")) {
            std::vector<int> expected =
                block.at("neighbor_total_degrees").get<std::vector<int>>();
            if (expected != report.degree_correlation.max_in_degree_neighbor_total_degrees) {
                checker.add("degree correlation analysis neighbor total-degree list",
                            fmt_list(expected),
                            fmt_list(report.degree_correlation.max_in_degree_neighbor_total_degrees));
            }
        }
    }

    if (fx.contains("assortativity")) {
        const ordered_json& block = fx.at("assortativity");
        const std::pair<const char*, const AssortativityRow*> rows[] = {
            {"in", &report.assortativity_in},
            {"out", &report.assortativity_out},
            {"total", &report.assortativity_total},
        };
        for (const auto& [direction, row] : rows) {
            if (!block.contains(direction)) continue;
            const ordered_json& sub = block.at(direction);
            for (const char* method : {"pearson", "spearman", "kendall"}) {
                if (!sub.contains(method)) continue;
                const std::optional<CorrelationCell>* cell = row_cell(*row, method);
                checker.check_correlation(sub.at(method),
                                          std::string("Table IV ") + direction + " " + method,
                                          *cell);
            }
        }
    }

    if (fx.contains("chi_square_p")) {
        const ordered_json& block = fx.at("chi_square_p");
        for (auto it = block.begin(); it != block.end(); ++it) {
            if (it.key() == "provenance") continue;
            const std::string& algorithm = it.key();
            double expected = it.value().at("p").get<double>();
            bool floor = it.value().contains("floor") && it.value().at("floor").get<bool>();
            std::string provenance = "Table VI " + algorithm + " p-value";
            const CommunityReport* entry = nullptr;
            if (report.community_results) {
                for (const CommunityReport& candidate : *report.community_results) {
                    if (candidate.algorithm == algorithm) {
                        entry = &candidate;
                        break;
                    }
                }
            }
            if (!entry) {
                checker.add(provenance, fmt(expected), "absent");
            } else if (floor) {
                checker.check_p_bound(provenance, expected, entry->chi_square_p);
            } else {
                checker.check_p(provenance, expected, entry->chi_square_p);
            }
        }
    }

    if (fx.contains("pagerank_top") && fx.at("pagerank_top").contains("rows")) {
        const ordered_json& rows = fx.at("pagerank_top").at("rows");
        for (const ordered_json& row : rows) {
            std::string name = row.at(0).get<std::string>();
            double score = row.at(1).get<double>();
            std::string provenance = "Table VII row '" + name + "'";
            auto it = std::find_if(report.pagerank_table.begin(), report.pagerank_table.end(),
                                   [&](const PageRankTableRow& r) { return r.vertex == name; });
            if (it == report.pagerank_table.end()) {
                checker.add(provenance, "score " + fmt(score), "absent from top table");
            } else {
                checker.check_real(provenance, score, it->score, tolerances.pagerank_score);
            }
        }
        if (rows.size() >= 3) {
            std::vector<std::string> expected_top, actual_top;
            for (std::size_t i = 0; i < 3; ++i) {
                expected_top.push_back(rows.at(i).at(0).get<std::string>());
            }
            for (std::size_t i = 0; i < report.pagerank_table.size() && i < 3; ++i) {
                actual_top.push_back(report.pagerank_table[i].vertex);
            }
            if (expected_top != actual_top) {
                checker.add("Table VII top-3 rank order", fmt_list(expected_top),
                            fmt_list(actual_top));
            }
        }
    }

    if (fx.contains("triple_subgraph")) {
        const ordered_json& block = fx.at("triple_subgraph");
        if (block.contains("vertices")) {
            long long expected = block.at("vertices").get<long long>();
            if (!report.triple_counts) {
                checker.add("triple count analysis subgraph vertices", fmt_int(expected),
                            "absent");
            } else {
                checker.check_int("triple count analysis subgraph vertices", expected,
                                  static_cast<long long>(report.triple_counts->vertices));
            }
        }
        if (block.contains("edges")) {
            long long expected = block.at("edges").get<long long>();
            if (!report.triple_counts) {
                checker.add("triple count analysis subgraph edges", fmt_int(expected), "absent");
            } else {
                checker.check_int("triple count analysis subgraph edges", expected,
                                  static_cast<long long>(report.triple_counts->edges));
            }
        }
    }

    auto triple_cell =
        [&](std::optional<CorrelationCell> TripleCountSummary::*member)
        -> std::optional<CorrelationCell> {
        if (!report.triple_counts) return std::nullopt;
        return (*report.triple_counts).*member;
    };

    if (fx.contains("triple_pagerank_correlation")) {
        const ordered_json& block = fx.at("triple_pagerank_correlation");
        if (block.contains("spearman")) {
            checker.check_correlation(block.at("spearman"), "triple count analysis spearman",
                                      triple_cell(&TripleCountSummary::pagerank_spearman));
        }
        if (block.contains("kendall")) {
            checker.check_correlation(block.at("kendall"), "triple count analysis kendall",
                                      triple_cell(&TripleCountSummary::pagerank_kendall));
        }
    }

    if (fx.contains("triple_assortativity")) {
        const ordered_json& block = fx.at("triple_assortativity");
        const std::pair<const char*, std::optional<CorrelationCell> TripleCountSummary::*>
            cells[] = {
                {"pearson", &TripleCountSummary::assortativity_pearson},
                {"spearman", &TripleCountSummary::assortativity_spearman},
                {"kendall", &TripleCountSummary::assortativity_kendall},
            };
        for (const auto& [method, member] : cells) {
            if (!block.contains(method)) continue;
            checker.check_correlation(block.at(method), std::string("Table VIII ") + method,
                                      triple_cell(member));
        }
    }

    return std::move(checker.list);
}

GoldenFixture fixture_from_report(const AnalysisReport& report) {
    ordered_json fx;
    fx["fixture"] = "minted-from-report";

    ordered_json table1;
    table1["provenance"] = "Table I";
    table1["vertices"] = report.vertices;
    table1["edges"] = report.edges;
    table1["weakly_connected"] = report.weakly_connected;
    table1["strongly_connected"] = report.strongly_connected;
    if (report.distances) {
        table1["diameter"] = report.distances->diameter;
        table1["average_path_length"] = report.distances->average_path_length;
    }
    fx["table1"] = std::move(table1);

    fx["scc"] = {
        {"provenance", "connectivity analysis"},
        {"component_count", report.scc_count},
        {"singleton_count", report.scc_singletons},
        {"nonsingleton_sizes", report.scc_nonsingleton_sizes},
    };

    auto degree_rows = [](const std::vector<DegreeTableRow>& rows) {
        ordered_json list = ordered_json::array();
        for (const DegreeTableRow& row : rows) {
            list.push_back(ordered_json::array({row.vertex, row.degree}));
        }
        return list;
    };
    fx["top_in_degrees"] = {{"provenance", "Table II"},
                            {"rows", degree_rows(report.top_in_degrees)}};
    fx["top_out_degrees"] = {{"provenance", "Table III"},
                             {"rows", degree_rows(report.top_out_degrees)}};

    if (report.power_law.mle_alpha || report.power_law.least_squares_alpha) {
        double value = report.power_law.mle_alpha ? *report.power_law.mle_alpha
                                                  : *report.power_law.least_squares_alpha;
        fx["power_law_alpha"] = {{"provenance", "degree distribution analysis"},
                                 {"value", value}};
    }

    {
        ordered_json block;
        block["provenance"] = "degree correlation analysis";
        if (report.degree_correlation.spearman) {
            block["spearman"] = correlation_fixture_entry(report.degree_correlation.spearman);
        }
        if (report.degree_correlation.kendall) {
            block["kendall"] = correlation_fixture_entry(report.degree_correlation.kendall);
        }
        fx["degree_correlation"] = std::move(block);
    }

    fx["max_in_degree_neighbors"] = {
        {"provenance", "degree correlation analysis"},
        {"vertex", report.degree_correlation.max_in_degree_vertex},
        {"neighbor_total_degrees", report.degree_correlation.max_in_degree_neighbor_total_degrees},
    };

    {
        ordered_json block;
        block["provenance"] = "Table IV";
        const std::pair<const char*, const AssortativityRow*> rows[] = {
            {"in", &report.assortativity_in},
            {"out", &report.assortativity_out},
            {"total", &report.assortativity_total},
        };
        for (const auto& [direction, row] : rows) {
            ordered_json sub;
            if (row->pearson) sub["pearson"] = correlation_fixture_entry(row->pearson);
            if (row->spearman) sub["spearman"] = correlation_fixture_entry(row->spearman);
            if (row->kendall) sub["kendall"] = correlation_fixture_entry(row->kendall);
            if (!sub.empty()) block[direction] = std::move(sub);
        }
        fx["assortativity"] = std::move(block);
    }

    if (report.community_results) {
        ordered_json block;
        block["provenance"] = "Table VI";
        for (const CommunityReport& entry : *report.community_results) {
            block[entry.algorithm] = {{"p", entry.chi_square_p}, {"floor", false}};
        }
        fx["chi_square_p"] = std::move(block);
    }

    {
        ordered_json rows = ordered_json::array();
        for (const PageRankTableRow& row : report.pagerank_table) {
            rows.push_back(ordered_json::array({row.vertex, row.score}));
        }
        fx["pagerank_top"] = {{"provenance", "Table VII"}, {"rows", std::move(rows)}};
    }

    if (report.triple_counts) {
        fx["triple_subgraph"] = {
            {"provenance", "triple count analysis"},
            {"vertices", report.triple_counts->vertices},
            {"edges", report.triple_counts->edges},
        };
        ordered_json corr;
        corr["provenance"] = "triple count analysis";
        if (report.triple_counts->pagerank_spearman) {
            corr["spearman"] = correlation_fixture_entry(report.triple_counts->pagerank_spearman);
        }
        if (report.triple_counts->pagerank_kendall) {
            corr["kendall"] = correlation_fixture_entry(report.triple_counts->pagerank_kendall);
        }
        fx["triple_pagerank_correlation"] = std::move(corr);

        ordered_json assort;
        assort["provenance"] = "Table VIII";
        if (report.triple_counts->assortativity_pearson) {
            assort["pearson"] =
                correlation_fixture_entry(report.triple_counts->assortativity_pearson);
        }
        if (report.triple_counts->assortativity_spearman) {
            assort["spearman"] =
                correlation_fixture_entry(report.triple_counts->assortativity_spearman);
        }
        if (report.triple_counts->assortativity_kendall) {
            assort["kendall"] =
                correlation_fixture_entry(report.triple_counts->assortativity_kendall);
        }
        fx["triple_assortativity"] = std::move(assort);
    }

    return GoldenFixture::from_json(std::move(fx));
}

} // namespace lodcloud
