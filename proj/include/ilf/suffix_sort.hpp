#ifndef ILF_SUFFIX_SORT_HPP
#define ILF_SUFFIX_SORT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ilf/alphabet.hpp"
#include "ilf/factorization.hpp"

namespace ilf {

enum class suffix_scope { local, global };

// Positions of span [begin, end) sorted by their suffix strings, either the
// local suffixes w[i..end) or the global suffixes w[i..n). Plain comparison
// sort; this is the reference path, not a contender to linear-time suffix
// array construction. Positions are 0-based.
inline std::vector<std::size_t> sort_suffixes(std::string_view w, std::size_t begin, std::size_t end,
                                              const alphabet& a, order_kind order, suffix_scope scope) {
    require_admissible(w, a);
    if (begin >= end || end > w.size())
        throw std::domain_error("sort_suffixes: empty or out-of-range span");
    const alphabet ord = order == order_kind::lex ? a : a.inverse();
    const std::size_t limit = scope == suffix_scope::local ? end : w.size();
    std::vector<std::size_t> pos(end - begin);
    std::iota(pos.begin(), pos.end(), begin);
    std::sort(pos.begin(), pos.end(), [&](std::size_t i, std::size_t j) {
        return detail::precedes_ranked(w.substr(i, limit - i), w.substr(j, limit - j), ord);
    });
    return pos;
}

// true iff the local order of the nonempty suffixes of u = factors r..s of f
// agrees with the global order of the corresponding suffixes of w. Factor
// indices are 0-based and inclusive.
inline bool check_compatibility(std::string_view w, const factorization& f, std::size_t r, std::size_t s,
                                const alphabet& a, order_kind order) {
    if (r > s || s >= f.size())
        throw std::invalid_argument("check_compatibility: factor range out of bounds");
    if (w != f.word())
        throw std::invalid_argument("check_compatibility: factorization is over a different word");
    const std::vector<std::size_t> local =
        sort_suffixes(w, f.begin_of(r), f.end_of(s), a, order, suffix_scope::local);
    // global suffixes are pairwise distinct, so compatibility means they are
    // strictly ascending along the locally sorted positions
    const alphabet ord = order == order_kind::lex ? a : a.inverse();
    for (std::size_t t = 1; t < local.size(); ++t)
        if (!detail::precedes_ranked(w.substr(local[t - 1]), w.substr(local[t]), ord)) return false;
    return true;
}

namespace detail {

inline std::vector<std::size_t> merge_sort_range(std::string_view w, const factorization& f,
                                                 const alphabet& inv, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
        // local sort within a single factor; compatibility makes the result
        // valid as a slice of the global order
        const std::size_t begin = f.begin_of(lo), end = f.end_of(lo);
        std::vector<std::size_t> pos(end - begin);
        std::iota(pos.begin(), pos.end(), begin);
        std::sort(pos.begin(), pos.end(), [&](std::size_t i, std::size_t j) {
            return precedes_ranked(w.substr(i, end - i), w.substr(j, end - j), inv);
        });
        return pos;
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const std::vector<std::size_t> left = merge_sort_range(w, f, inv, lo, mid);
    const std::vector<std::size_t> right = merge_sort_range(w, f, inv, mid, hi);

    // merge on the global suffixes, so equal local strings cannot collide
    // TODO: the merge re-compares whole suffixes; reusing the factor
    // structure to shortcut these comparisons is an open improvement
    std::vector<std::size_t> out;
    out.reserve(left.size() + right.size());
    std::size_t li = 0, ri = 0;
    while (li < left.size() && ri < right.size()) {
        if (precedes_ranked(w.substr(left[li]), w.substr(right[ri]), inv))
            out.push_back(left[li++]);
        else
            out.push_back(right[ri++]);
    }
    while (li < left.size()) out.push_back(left[li++]);
    while (ri < right.size()) out.push_back(right[ri++]);
    return out;
}

} // namespace detail

// Global suffix order under the inverse order, computed divide-and-conquer
// over the factors: sort each half's local suffixes recursively, then merge
// the corresponding global lists. Requires a factorization whose factor
// ranges are compatible with global sorting under the inverse order, which
// holds for icfl and cfl-in.
inline std::vector<std::size_t> merge_sort_suffixes(std::string_view w, const factorization& f,
                                                    const alphabet& a) {
    if (f.kind() != factorization_kind::icfl && f.kind() != factorization_kind::cfl_in)
        throw std::invalid_argument("merge_sort_suffixes: factorization kind must be icfl or cfl-in");
    if (w != f.word())
        throw std::invalid_argument("merge_sort_suffixes: factorization is over a different word");
    require_admissible(w, a);
    const alphabet inv = a.inverse();
    return detail::merge_sort_range(w, f, inv, 0, f.size());
}

} // namespace ilf

#endif
