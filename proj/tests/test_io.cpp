#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilf/inverse_lyndon.hpp"
#include "ilf/lyndon.hpp"
#include "ilf/record_reader.hpp"
#include "ilf/report.hpp"

using namespace ilf;

TEST_CASE("raw records are lines with 1-based ids") {
    std::istringstream in("abc\n\nxyz\r\n");
    record_reader rd(in, input_format::raw);
    record r;
    REQUIRE(rd.next(r));
    CHECK(r.id == "1");
    CHECK(r.data == "abc");
    REQUIRE(rd.next(r));
    CHECK(r.id == "2");
    CHECK(r.data.empty());
    REQUIRE(rd.next(r));
    CHECK(r.id == "3");
    CHECK(r.data == "xyz");  // carriage return stripped
    CHECK_FALSE(rd.next(r));
}

TEST_CASE("fasta records concatenate sequence lines byte for byte") {
    std::istringstream in(">seq1 first\nACGT\nacgt\n\n>seq2\n\n>seq3\nTT\n");
    record_reader rd(in, input_format::fasta);
    record r;
    REQUIRE(rd.next(r));
    CHECK(r.id == "seq1 first");
    CHECK(r.data == "ACGTacgt");  // case preserved, no folding
    REQUIRE(rd.next(r));
    CHECK(r.id == "seq2");
    CHECK(r.data.empty());
    REQUIRE(rd.next(r));
    CHECK(r.id == "seq3");
    CHECK(r.data == "TT");
    CHECK_FALSE(rd.next(r));
}

TEST_CASE("fasta input must start with a header") {
    std::istringstream in("ACGT\n>seq\nAA\n");
    record_reader rd(in, input_format::fasta);
    record r;
    CHECK_THROWS_AS(rd.next(r), std::runtime_error);
}

TEST_CASE("factor report statistics") {
    const alphabet abcd("abcd");
    const std::string w = "dabadabdabdadac";
    const factor_report r = make_report("w", icfl(w, abcd), true);
    CHECK(r.kind == "icfl");
    CHECK(r.count == 3);
    CHECK(r.lengths == std::vector<std::size_t>{4, 6, 5});
    CHECK(r.min_len == 4);
    CHECK(r.max_len == 6);
    CHECK(fixed6(r.mean_len) == "5.000000");
    CHECK(fixed6(r.median_len) == "5.000000");
    CHECK(r.boundaries == std::vector<std::size_t>{4, 10, 15});
    CHECK(r.factors == std::vector<std::string>{"daba", "dabdab", "dadac"});

    std::size_t total = 0;
    for (auto l : r.lengths) total += l;
    CHECK(total == w.size());
}

TEST_CASE("median of an even factor count") {
    const alphabet ab("ab");
    const factor_report r = make_report("w", cfl("abaab", ab), false);  // lengths 2, 3
    CHECK(fixed6(r.median_len) == "2.500000");
    CHECK(r.factors.empty());
}

TEST_CASE("json reports round-trip byte for byte") {
    const alphabet abcd("abcd");
    for (const std::string w : {"dabadabdabdadac", "bbcbcacad", "a"}) {
        const std::string line = to_json_line(make_report("rec", icfl(w, abcd), true));
        const auto parsed = nlohmann::ordered_json::parse(line);
        CHECK(parsed.dump() == line);
        CHECK(parsed["kind"] == "icfl");
    }
}
