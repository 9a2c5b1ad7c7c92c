#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "ilf/alphabet.hpp"

using namespace ilf;

TEST_CASE("alphabet construction and ranks") {
    const alphabet bytes = alphabet::byte_order();
    CHECK(bytes.size() == 256);
    CHECK(bytes.rank('a') == 'a');
    CHECK(bytes.contains(0));

    const alphabet a("abcd");
    CHECK(a.size() == 4);
    CHECK(a.rank('a') == 0);
    CHECK(a.rank('d') == 3);
    CHECK(a.rank('x') == -1);
    CHECK_FALSE(a.contains('x'));

    CHECK_THROWS_AS(alphabet("aba"), std::invalid_argument);
    CHECK_THROWS_AS(alphabet(""), std::invalid_argument);
}

TEST_CASE("inverse alphabet ranks are mirrored") {
    const alphabet a("abcd");
    const alphabet inv = a.inverse();
    for (char c : std::string("abcd"))
        CHECK(inv.rank(uc(c)) == static_cast<int>(a.size()) - 1 - a.rank(uc(c)));
    // involution
    const alphabet twice = inv.inverse();
    for (char c : std::string("abcd")) CHECK(twice.rank(uc(c)) == a.rank(uc(c)));
}

TEST_CASE("compare_lex classifies pairs") {
    const alphabet ab("ab");
    CHECK(compare_lex("aabab", "abaab", ab) == lex_relation::less_sharp);
    CHECK(compare_lex("abc", "abc", alphabet::byte_order()) == lex_relation::equal);
    CHECK(compare_lex("ab", "abba", ab) == lex_relation::proper_prefix);
    CHECK(compare_lex("abba", "ab", ab) == lex_relation::has_proper_prefix);
    CHECK(compare_lex("b", "a", ab) == lex_relation::greater_sharp);

    // the empty word is a proper prefix of any nonempty word
    CHECK(compare_lex("", "a", ab) == lex_relation::proper_prefix);
    CHECK(compare_lex("", "", ab) == lex_relation::equal);

    CHECK_THROWS_AS(compare_lex("ax", "a", ab), std::invalid_argument);
}

TEST_CASE("compare_inv_lex is comparison under the inverse alphabet") {
    const alphabet abcd("abcd");
    // daba is not smaller than dab under the inverse order: dab is its prefix
    CHECK(compare_inv_lex("daba", "dab", abcd) == lex_relation::has_proper_prefix);
    CHECK(compare_inv_lex("x", "x", alphabet::byte_order()) == lex_relation::equal);
    // ab << ba under a<b, so ba comes first under the inverse order
    CHECK(compare_inv_lex("ba", "ab", alphabet("ab")) == lex_relation::less_sharp);
}

TEST_CASE("order totality and antisymmetry on random pairs") {
    std::mt19937_64 rng(7);
    const alphabet a("abc");
    for (int t = 0; t < 2000; ++t) {
        const std::string x = corpus::random_word(rng, 1, 12, 3, 3);
        const std::string y = corpus::random_word(rng, 1, 12, 3, 3);
        for (const alphabet& ord : {a, a.inverse()}) {
            const bool xy = precedes(x, y, ord);
            const bool yx = precedes(y, x, ord);
            const bool eq = x == y;
            CHECK(((xy && !yx && !eq) || (!xy && yx && !eq) || (!xy && !yx && eq)));
        }
    }
}

TEST_CASE("incomparable pairs flip between the two orders") {
    std::mt19937_64 rng(11);
    const alphabet a("abcd");
    int seen = 0;
    for (int t = 0; t < 4000; ++t) {
        const std::string x = corpus::random_word(rng, 1, 10, 4, 4);
        const std::string y = corpus::random_word(rng, 1, 10, 4, 4);
        const lex_relation r = compare_lex(x, y, a);
        if (r != lex_relation::less_sharp && r != lex_relation::greater_sharp) continue;
        ++seen;
        // y precedes x under the inverse order iff x precedes y
        CHECK((compare_inv_lex(y, x, a) == lex_relation::less_sharp) ==
              (r == lex_relation::less_sharp));
    }
    CHECK(seen > 1000);
}

TEST_CASE("sharp order is stable under right extension") {
    std::mt19937_64 rng(13);
    const alphabet a("abc");
    for (int t = 0; t < 2000; ++t) {
        const std::string x = corpus::random_word(rng, 1, 8, 3, 3);
        const std::string y = corpus::random_word(rng, 1, 8, 3, 3);
        if (!sharply_less(x, y, a)) continue;
        const std::string u = corpus::random_word(rng, 0, 6, 3, 3);
        const std::string v = corpus::random_word(rng, 0, 6, 3, 3);
        CHECK(sharply_less(x + u, y + v, a));
    }
}

TEST_CASE("is_border_free") {
    CHECK(is_border_free("aaab"));
    CHECK(is_border_free("a"));
    CHECK_FALSE(is_border_free("bab"));
    CHECK_FALSE(is_border_free("aa"));
    CHECK_THROWS_AS(is_border_free(""), std::domain_error);

    // agreement with the quadratic definition
    corpus::each_word(2, 1, 10, [](const std::string& w) {
        bool bordered = false;
        for (std::size_t k = 1; k < w.size() && !bordered; ++k)
            if (w.compare(0, k, w, w.size() - k, k) == 0) bordered = true;
        CHECK(is_border_free(w) == !bordered);
    });
}
