#include <fstream>

#include "auslab/corpus.hpp"
#include "auslab/error.hpp"
#include "doctest.h"

using namespace auslab;

TEST_CASE("constructor expressions") {
    CHECK(build_algebra("field(3)")->dim() == 1);
    CHECK(build_algebra("trunc(2, 3)")->dim() == 3);
    CHECK(build_algebra("matrix(2,2)")->dim() == 4);
    CHECK(build_algebra("product(field(2),trunc(2,2))")->dim() == 3);
    CHECK(build_algebra("tri(field(2),3)")->dim() == 6);
    CHECK(build_algebra("tri(tri(field(2),2),2)")->dim() == 9);
    CHECK(build_algebra("lrsz(2)")->dim() == 3);
    CHECK(build_algebra("corner(field(2))")->dim() == 6);
    CHECK(build_algebra("opposite(tri(field(2),2))")->same_table(opposite(lower_triangular(field_algebra(2), 2))));
    CHECK(build_algebra("path_a2(2)")->dim() == 3);

    CHECK_THROWS_AS(build_algebra("field(4)"), NotPrime);
    CHECK_THROWS_AS(build_algebra("cyclic(2)"), ParseError);
    CHECK_THROWS_AS(build_algebra("trunc(2)"), ParseError);
    CHECK_THROWS_AS(build_algebra("tri(field(2),x)"), ParseError);
    CHECK_THROWS_AS(build_algebra("tri(field(2),2"), ParseError);
    CHECK_THROWS_AS(build_algebra("file(no-such-file.alg)", "/nonexistent"), ParseError);
}

TEST_CASE("constructors from files resolve against the manifest directory") {
    auto dir = std::filesystem::temp_directory_path() / "auslab_corpus_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "f2.alg") << serialize_algebra(field_algebra(2));
    auto A = build_algebra("file(f2.alg)", dir);
    CHECK(A->same_table(field_algebra(2)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("manifest parsing") {
    auto entries = parse_manifest(
        "# comment\n"
        "\n"
        "a\tfield(2)\t4\tvalidate; profile=0,-inf\t[TRIVIAL]\n"
        "b\ttri(field(2),2)\t6\t\t[DERIVED] oracle: analyzer\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "a");
    CHECK(entries[0].cap == 4);
    CHECK(entries[0].checks == std::vector<std::string>{"validate", "profile=0,-inf"});
    CHECK(entries[1].checks.empty());
    CHECK(entries[1].provenance == "[DERIVED] oracle: analyzer");

    CHECK_THROWS_AS(parse_manifest("a\tfield(2)\t6\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("a\tfield(2)\tsix\tvalidate\tx\n"), ParseError);
}

TEST_CASE("entry results") {
    CorpusEntry e{"t2", "tri(field(2),2)", 6,
                  {"profile=0,1,-inf", "dims=4,1,0", "gnk(2,0)=holds", "lnop(1,2)=fails", "dominant(2)=0,1",
                   "profile=0,-inf,-inf", "bogus(1)", "gnk(2)=holds"},
                  ""};
    auto r = run_entry(e, {});
    CHECK(r.error.empty());
    REQUIRE(r.checks.size() == 8);
    for (std::size_t i = 0; i < 5; ++i) CHECK_MESSAGE(r.checks[i].pass, r.checks[i].check);
    CHECK_FALSE(r.checks[5].pass);
    CHECK(r.checks[5].detail == "got 0,1,-inf");
    CHECK_FALSE(r.checks[6].pass);
    CHECK_FALSE(r.checks[7].pass);
    CHECK_FALSE(r.pass());

    auto broken = run_entry({"x", "field(6)", 6, {"validate"}, ""}, {});
    CHECK_FALSE(broken.error.empty());
    CHECK_FALSE(broken.pass());
}

TEST_CASE("corpus runs are ordered by name and independent of thread count") {
    std::vector<CorpusEntry> entries = {
        {"z", "trunc(2,2)", 6, {"profile=0,-inf", "pd_routes(2)"}, ""},
        {"a", "field(2)", 6, {"profile=0,-inf", "flat_triples(8)"}, ""},
        {"m", "tri(field(3),2)", 6, {"profile=0,1,-inf", "monotone(2,2)"}, ""},
        {"b", "field(5)", 6, {"profile=0,1"}, ""},
    };
    auto serial = run_corpus(entries, "", 1, {});
    auto parallel = run_corpus(entries, "", 4, {});
    REQUIRE(serial.size() == 4);
    CHECK(serial[0].name == "a");
    CHECK(serial[1].name == "b");
    CHECK(serial[3].name == "z");
    CHECK(format_results(serial) == format_results(parallel));
    CHECK(format_results(serial).find("entries\t4\tfailed\t1\n") != std::string::npos);

    auto only = run_corpus(entries, "[ab]", 2, {});
    CHECK(only.size() == 2);
}

TEST_CASE("the shipped manifest passes") {
    auto entries = load_manifest(default_manifest());
    CHECK(entries.size() >= 15);
    for (const auto& r : run_corpus(entries, "", 2, default_manifest().parent_path())) {
        CHECK_MESSAGE(r.pass(), r.name);
        CHECK(r.error.empty());
    }
}
