#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ilf/inverse_lyndon.hpp"
#include "ilf/lyndon.hpp"
#include "ilf/suffix_sort.hpp"

using namespace ilf;

namespace {
const alphabet AB("ab");
const alphabet ABCD("abcd");

std::vector<std::size_t> naive_global(std::string_view w, const alphabet& a, order_kind order) {
    return sort_suffixes(w, 0, w.size(), a, order, suffix_scope::global);
}
} // namespace

TEST_CASE("sort_suffixes local and global lists") {
    const std::string w = "bbcbcacad";

    // local suffixes of the factor bbcbc: bbcbc, bc, bcbc, c, cbc
    CHECK(sort_suffixes(w, 0, 5, ABCD, order_kind::lex, suffix_scope::local) ==
          std::vector<std::size_t>{0, 3, 1, 4, 2});

    // local suffixes of acad: acad, ad, cad, d
    CHECK(sort_suffixes(w, 5, 9, ABCD, order_kind::lex, suffix_scope::local) ==
          std::vector<std::size_t>{5, 7, 6, 8});

    // full global order: acad, ad, bbcbcacad, bcacad, bcbcacad, cacad, cad, cbcacad, d
    CHECK(naive_global(w, ABCD, order_kind::lex) ==
          std::vector<std::size_t>{5, 7, 0, 3, 1, 4, 6, 2, 8});

    CHECK(sort_suffixes("z", 0, 1, alphabet::byte_order(), order_kind::lex, suffix_scope::global)
              .size() == 1);
}

TEST_CASE("sort_suffixes rejects bad spans") {
    CHECK_THROWS_AS(sort_suffixes("aba", 2, 2, AB, order_kind::lex, suffix_scope::local),
                    std::domain_error);
    CHECK_THROWS_AS(sort_suffixes("aba", 0, 9, AB, order_kind::lex, suffix_scope::local),
                    std::domain_error);
    CHECK_THROWS_AS(sort_suffixes("abc", 0, 3, AB, order_kind::lex, suffix_scope::local),
                    std::invalid_argument);  // out-of-alphabet byte
}

TEST_CASE("nested suffixes of a power sort by length") {
    // under either order a < aa < aaa < aaaa
    CHECK(naive_global("aaaa", AB, order_kind::lex) == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK(naive_global("aaaa", AB, order_kind::inv_lex) == std::vector<std::size_t>{3, 2, 1, 0});
}

TEST_CASE("factor ranges of cfl are compatible under the plain order") {
    const std::string w = "bbcbcacad";
    const factorization f = cfl(w, ABCD);
    for (std::size_t r = 0; r < f.size(); ++r)
        for (std::size_t s = r; s < f.size(); ++s)
            CHECK(check_compatibility(w, f, r, s, ABCD, order_kind::lex));

    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const std::string v = corpus::random_word(rng, 1, 40, 2, 4);
        const factorization g = cfl(v, ABCD);
        for (std::size_t r = 0; r < g.size(); ++r)
            for (std::size_t s = r; s < g.size(); ++s)
                REQUIRE(check_compatibility(v, g, r, s, ABCD, order_kind::lex));
    }
}

TEST_CASE("factor ranges of icfl and cfl_in are compatible under the inverse order") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::string v = corpus::random_word(rng, 1, 40, 2, 4);
        for (const factorization& g : {icfl(v, ABCD), cfl_in(v, ABCD)}) {
            for (std::size_t r = 0; r < g.size(); ++r)
                for (std::size_t s = r; s < g.size(); ++s)
                    REQUIRE(check_compatibility(v, g, r, s, ABCD, order_kind::inv_lex));
        }
    }
}

TEST_CASE("compatibility fails for the known counterexamples") {
    // (dad, dba, dc) is an inverse Lyndon factorization of daddbadc, yet the
    // range dad·dba is not compatible under the inverse order
    const std::string w = "daddbadc";
    const factorization f(w, {3, 6, 8}, factorization_kind::custom);
    CHECK_FALSE(check_compatibility(w, f, 0, 1, ABCD, order_kind::inv_lex));

    // the middle icfl factor of this word is not compatible under the plain order
    const std::string v = "dabadabdabdabdadac";
    const factorization g = icfl(v, ABCD);
    REQUIRE(g.size() == 3);
    CHECK_FALSE(check_compatibility(v, g, 1, 1, ABCD, order_kind::lex));

    CHECK_THROWS_AS(check_compatibility(w, f, 2, 1, ABCD, order_kind::lex), std::invalid_argument);
    CHECK_THROWS_AS(check_compatibility(w, f, 0, 3, ABCD, order_kind::lex), std::invalid_argument);
}

TEST_CASE("merge sort reproduces the plain global order through the reversed alphabet") {
    // with the base order reversed, the inverse order is a<b<c<d again
    const alphabet reversed("dcba");
    const std::string w = "bbcbcacad";
    const factorization f = cfl_in(w, reversed);
    CHECK(merge_sort_suffixes(w, f, reversed) ==
          std::vector<std::size_t>{5, 7, 0, 3, 1, 4, 6, 2, 8});
}

TEST_CASE("merge sort equals the naive global sort") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 300; ++t) {
        const std::string w = corpus::random_word(rng, 1, 60, 1, 4);
        const auto expect = naive_global(w, ABCD, order_kind::inv_lex);
        CHECK(merge_sort_suffixes(w, icfl(w, ABCD), ABCD) == expect);
        CHECK(merge_sort_suffixes(w, cfl_in(w, ABCD), ABCD) == expect);
    }
}

TEST_CASE("merge sort rejects other factorization kinds") {
    const std::string w = "daddbadc";
    CHECK_THROWS_AS(merge_sort_suffixes(w, cfl(w, ABCD), ABCD), std::invalid_argument);
}
