#include <gpd/document.hpp>
#include <gpd/fixtures.hpp>

#include <doctest.h>

#include <string>

using namespace gpd;

TEST_CASE("serialization round trips every fixture") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        GroupoidDocument doc = fixture_by_name(name);
        GroupoidDocument back = parse_document(serialize_document(doc));
        CHECK(back == doc);
        CHECK(document_digest(back) == document_digest(doc));
    }
}

TEST_CASE("fixture files on disk match the builders") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        GroupoidDocument doc = fixture_by_name(name);
        GroupoidDocument disk = load_document(std::string(FIXTURE_DIR) + "/" + name + ".gpd");
        CHECK(disk == doc);
    }
}

TEST_CASE("digest distinguishes different groupoids") {
    CHECK(document_digest(fixture_r2()) != document_digest(fixture_r3()));
    CHECK(document_digest(fixture_swap()) != document_digest(fixture_trivaction()));
}

TEST_CASE("digest hex is sixteen lowercase digits") {
    std::string hex = digest_hex(document_digest(fixture_r3()));
    CHECK(hex.size() == 16);
    for (char c : hex) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
}

TEST_CASE("parser reports malformed documents") {
    CHECK_THROWS_AS(parse_document("unit x nonsense\n"), ParseError);
    CHECK_THROWS_AS(parse_document("frobnicate\n"), ParseError);
    CHECK_THROWS_AS(parse_document("unit x 1\narrow f x zz\n"), ParseError);
    CHECK_THROWS_AS(parse_document("unit x 1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_document("unit x 1\naset S unknown_arrow\n"), ParseError);
}

TEST_CASE("parser accepts comments and blank lines") {
    GroupoidDocument doc = parse_document(
        "# a lone atom\n"
        "\n"
        "unit x 1\n");
    CHECK(doc.g.atoms() == 1);
    CHECK(doc.g.atom_labels[0] == "x");
    CHECK(doc.g.declared_mass == Rat(1));
}

TEST_CASE("named sets survive the round trip") {
    GroupoidDocument doc = fixture_amalg3();
    REQUIRE(doc.arrow_sets.size() == 3);
    GroupoidDocument back = parse_document(serialize_document(doc));
    REQUIRE(back.arrow_sets.size() == 3);
    CHECK(back.arrow_sets == doc.arrow_sets);
    CHECK(back.find_arrow_set("G1"));
    CHECK(!back.find_arrow_set("G9"));
}

TEST_CASE("documents with atom sets round trip") {
    GroupoidDocument doc = fixture_r3();
    doc.atom_sets = {{"Y", {0, 2}}};
    GroupoidDocument back = parse_document(serialize_document(doc));
    CHECK(back.atom_sets == doc.atom_sets);
}

TEST_CASE("load rejects a missing file") {
    CHECK_THROWS(load_document("/nonexistent/nope.gpd"));
}
