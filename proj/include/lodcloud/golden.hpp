#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "lodcloud/report.hpp"

namespace lodcloud {

// Published aggregate values with per-field provenance strings. The bundled
// fixture carries only aggregates; no edge list ships with the library.
class GoldenFixture {
public:
    static GoldenFixture bundled();
    static GoldenFixture from_file(const std::string& path);
    static GoldenFixture from_json(nlohmann::ordered_json data);

    const nlohmann::ordered_json& data() const { return data_; }

private:
    nlohmann::ordered_json data_;
};

struct ValidationTolerances {
    double summary_real = 0.001;    // real-valued summary statistics
    double pagerank_score = 0.005;  // per-vertex centrality scores
    double log10_p = 1.0;           // p-values compared on a log10 scale
    double alpha = 0.15;            // power-law exponent
    double correlation = 0.02;      // correlation coefficients
};

// A mismatch is data, not an error: the validator returns all of them.
struct Discrepancy {
    std::string provenance;
    std::string expected;
    std::string actual;
};

std::vector<Discrepancy> validate(const AnalysisReport& report,
                                  const GoldenFixture& fixture,
                                  const ValidationTolerances& tolerances = {});

// Mints a fixture whose values are the report's own, so that
// validate(report, fixture_from_report(report)) is empty.
GoldenFixture fixture_from_report(const AnalysisReport& report);

} // namespace lodcloud
