#include <sstream>

#include "doctest.h"

#include "lodcloud/errors.hpp"
#include "lodcloud/metadata.hpp"
#include "test_support.hpp"

using lodcloud::DirectedGraph;

namespace {

DirectedGraph sample_graph() {
    return DirectedGraph::create({"DBpedia", "GeoNames", "Riese"}, {{0, 1}, {1, 2}});
}

} // namespace

TEST_CASE("row with empty triples yields a label and no count") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nDBpedia,general,\n");
    const auto metadata = lodcloud::load_metadata(source, g);
    REQUIRE(metadata.size() == 3);
    CHECK(metadata[0].content_label == "general");
    CHECK_FALSE(metadata[0].triple_count.has_value());
    CHECK_FALSE(metadata[1].content_label.has_value());
    CHECK_FALSE(metadata[2].triple_count.has_value());
}

TEST_CASE("empty file leaves every vertex unannotated") {
    const auto g = sample_graph();
    std::istringstream source("");
    const auto metadata = lodcloud::load_metadata(source, g);
    REQUIRE(metadata.size() == 3);
    for (const auto& entry : metadata) {
        CHECK_FALSE(entry.content_label.has_value());
        CHECK_FALSE(entry.triple_count.has_value());
    }
}

TEST_CASE("header-only file leaves every vertex unannotated") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\n");
    const auto metadata = lodcloud::load_metadata(source, g);
    for (const auto& entry : metadata) {
        CHECK_FALSE(entry.content_label.has_value());
        CHECK_FALSE(entry.triple_count.has_value());
    }
}

TEST_CASE("triple counts parse as integers") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nRiese,government,5430000\nGeoNames,,93896732\n");
    const auto metadata = lodcloud::load_metadata(source, g);
    CHECK(metadata[2].triple_count == 5430000);
    CHECK(metadata[2].content_label == "government");
    CHECK(metadata[1].triple_count == 93896732);
    CHECK_FALSE(metadata[1].content_label.has_value());
}

TEST_CASE("unknown vertex id is rejected") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nNoSuchSet,media,\n");
    CHECK_THROWS_AS(lodcloud::load_metadata(source, g), lodcloud::UnknownVertexError);
}

TEST_CASE("negative triple count is rejected") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nDBpedia,general,-3\n");
    CHECK_THROWS_AS(lodcloud::load_metadata(source, g), lodcloud::NegativeTripleCountError);
}

TEST_CASE("duplicate vertex row is rejected") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nDBpedia,general,\nDBpedia,media,\n");
    CHECK_THROWS_AS(lodcloud::load_metadata(source, g), lodcloud::MalformedRowError);
}

TEST_CASE("wrong header is rejected") {
    const auto g = sample_graph();
    std::istringstream source("name,content,triples\nDBpedia,general,\n");
    CHECK_THROWS_AS(lodcloud::load_metadata(source, g), lodcloud::MalformedRowError);
}

TEST_CASE("row with wrong field count is rejected") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nDBpedia,general\n");
    CHECK_THROWS_AS(lodcloud::load_metadata(source, g), lodcloud::MalformedRowError);
}

TEST_CASE("non-numeric triple cell is rejected") {
    const auto g = sample_graph();
    std::istringstream source("id,content,triples\nDBpedia,general,many\n");
    CHECK_THROWS_AS(lodcloud::load_metadata(source, g), lodcloud::MalformedRowError);
}
