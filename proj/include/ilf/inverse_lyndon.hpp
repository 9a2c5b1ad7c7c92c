#ifndef ILF_INVERSE_LYNDON_HPP
#define ILF_INVERSE_LYNDON_HPP

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "ilf/alphabet.hpp"
#include "ilf/factorization.hpp"

namespace ilf {

// Outcome of find_prefix. Either the whole input is an inverse Lyndon word,
// or the input splits as w = x·y where x = p·p̄ is the shortest prefix of w
// that is not an inverse Lyndon word. The end-of-word sentinel used by the
// textbook formulation is modeled by this tagged result, never by a reserved
// byte.
struct find_prefix_result {
    bool inverse_word;      // whole input is an inverse Lyndon word
    std::size_t split_len;  // |x| = |p·p̄| when !inverse_word, 0 otherwise
};

// Decomposition x = r·a·u·r·b with a < b: p = r·a·u, p̄ = r·b. The remainder
// y of the original word follows x and is not stored here.
struct bre_result {
    std::size_t p_len;
    std::size_t pbar_len;  // always r_len + 1
    std::size_t r_len;
};

// Failure function: f[i] is the length of the longest proper prefix of
// w[0..i] that is also a suffix of w[0..i] (0-based; entry i describes the
// prefix of length i+1). Iterating f from the last entry enumerates every
// border length in decreasing order.
inline std::vector<std::size_t> border_table(std::string_view w) {
    require_nonempty(w);
    std::vector<std::size_t> f(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = f[k - 1];
        if (w[i] == w[k]) ++k;
        f[i] = k;
    }
    return f;
}

namespace detail {

inline find_prefix_result find_prefix_ranked(std::string_view w, const alphabet& a) {
    const std::size_t n = w.size();
    if (n == 1) return {true, 0};
    std::size_t i = 0, j = 1;
    while (j < n - 1 && a.rank(uc(w[j])) <= a.rank(uc(w[i]))) {
        if (a.rank(uc(w[j])) < a.rank(uc(w[i])))
            i = 0;
        else
            ++i;
        ++j;
    }
    if (j == n - 1 && a.rank(uc(w[j])) <= a.rank(uc(w[i]))) return {true, 0};
    return {false, j + 1};
}

inline bre_result find_bre_ranked(std::string_view x, const alphabet& a) {
    const std::size_t n = x.size() - 1;        // |r·a·u·r|
    const int b = a.rank(uc(x[n]));            // the symbol closing the extension
    const std::vector<std::size_t> f = border_table(x.substr(0, n));
    std::size_t i = n;
    std::size_t last = n + 1;                  // sentinel: no qualifying border yet
    while (i > 0) {
        const std::size_t border = f[i - 1];
        // border qualifies as r when the symbol after its first occurrence
        // is smaller than b; the last (shortest) qualifying border wins
        if (a.rank(uc(x[border])) < b) last = border;
        i = border;
    }
    if (last == n + 1)
        throw std::invalid_argument("find_bre: input has no prefix of the form r·a·u·r·b with a < b");
    return {n - last, last + 1, last};
}

} // namespace detail

// Shortest-bad-prefix scan. Returns inverse_word when w has no prefix of the
// form r·a·u·r·b with a < b; otherwise splits w = x·y at the shortest such
// prefix x. Runs in O(|x|).
inline find_prefix_result find_prefix(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    return detail::find_prefix_ranked(w, a);
}

// Splits the x produced by find_prefix as x = p·p̄ = r·a·u·r·b with the
// shortest possible r (which may be empty). Walks the border chain of
// x minus its last symbol.
inline bre_result find_bre(std::string_view x, const alphabet& a) {
    if (x.size() < 2) throw std::invalid_argument("find_bre: input shorter than 2 symbols");
    require_admissible(x, a);
    return detail::find_bre_ranked(x, a);
}

// true iff every proper nonempty suffix of w is smaller than w.
inline bool is_inverse_lyndon(std::string_view w, const alphabet& a) {
    return find_prefix(w, a).inverse_word;
}

// Canonical inverse Lyndon factorization. Factors are inverse Lyndon words
// in sharply increasing order, uniquely determined, computed in O(|w|).
//
// The recursive definition peels the prefix p and factorizes the rest; this
// implementation runs the peeling loop forward and then regroups from the
// right, so the depth is O(1) even for inputs whose factor count is Θ(n).
inline factorization icfl(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);

    std::vector<std::pair<std::size_t, std::size_t>> steps;  // (start of p, |r|)
    std::size_t off = 0;
    for (;;) {
        const find_prefix_result fp = detail::find_prefix_ranked(w.substr(off), a);
        if (fp.inverse_word) break;
        const bre_result br = detail::find_bre_ranked(w.substr(off, fp.split_len), a);
        steps.emplace_back(off, br.r_len);
        off += br.p_len;  // the next round continues at p̄·y, which starts here
    }

    // Regroup right to left: each peeled p either stands alone (|z| > |r|)
    // or is merged with the factor z that follows it.
    std::vector<std::size_t> tail_starts;  // starts of the factors after the current first
    std::size_t first_start = off;         // the trailing inverse Lyndon remainder
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const std::size_t first_end = tail_starts.empty() ? w.size() : tail_starts.back();
        const std::size_t z_len = first_end - first_start;
        if (z_len > it->second) tail_starts.push_back(first_start);
        first_start = it->first;
    }

    std::vector<std::size_t> ends;
    ends.reserve(tail_starts.size() + 1);
    for (auto it = tail_starts.rbegin(); it != tail_starts.rend(); ++it) ends.push_back(*it);
    ends.push_back(w.size());
    return factorization(w, std::move(ends), factorization_kind::icfl);
}

} // namespace ilf

#endif
