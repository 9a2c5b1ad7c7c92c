#ifndef ILF_LYNDON_HPP
#define ILF_LYNDON_HPP

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ilf/alphabet.hpp"
#include "ilf/factorization.hpp"

namespace ilf {

namespace detail {

// Duval's algorithm. One code path serves both orders: the inverse
// factorization runs it with the inverse alphabet.
inline std::vector<std::size_t> duval_ends(std::string_view w, const alphabet& a) {
    std::vector<std::size_t> ends;
    const std::size_t n = w.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t anchor = start;   // position being matched against inside the current run
        std::size_t j = start + 1;
        while (j < n && a.rank(uc(w[anchor])) <= a.rank(uc(w[j]))) {
            if (a.rank(uc(w[anchor])) < a.rank(uc(w[j])))
                anchor = start;
            else
                ++anchor;
            ++j;
        }
        const std::size_t len = j - anchor;   // length of the repeated Lyndon factor
        while (start <= anchor) {
            ends.push_back(start + len);
            start += len;
        }
    }
    return ends;
}

// Length of the longest Lyndon prefix (the first Duval factor run collapses
// to it when it starts at 0 and spans the run).
inline bool is_lyndon_ranked(std::string_view w, const alphabet& a) {
    std::size_t anchor = 0, j = 1;
    while (j < w.size() && a.rank(uc(w[anchor])) <= a.rank(uc(w[j]))) {
        if (a.rank(uc(w[anchor])) < a.rank(uc(w[j])))
            anchor = 0;
        else
            ++anchor;
        ++j;
    }
    return j - anchor == w.size();
}

} // namespace detail

// true iff w is strictly smaller than all of its proper nonempty suffixes.
inline bool is_lyndon(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    return detail::is_lyndon_ranked(w, a);
}

// A Lyndon word with respect to the inverse alphabet. Always unbordered and
// greater than every proper nonempty suffix.
inline bool is_anti_lyndon(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    return detail::is_lyndon_ranked(w, a.inverse());
}

// Chen-Fox-Lyndon factorization: the unique nonincreasing product of Lyndon
// words. Linear time.
inline factorization cfl(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    return factorization(w, detail::duval_ends(w, a), factorization_kind::cfl);
}

// Same factorization under the inverse order; factors are anti-Lyndon.
inline factorization cfl_in(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    return factorization(w, detail::duval_ends(w, a.inverse()), factorization_kind::cfl_in);
}

// true iff w = (uv)^n u for some u, nonempty v and n >= 1 with uv
// anti-Lyndon. Brute-force scan over all decompositions; this is an oracle,
// not a fast path, so inputs are capped (pass a larger max_len to override).
inline bool is_strict_sesquipower_of_anti_lyndon(std::string_view w, const alphabet& a,
                                                 std::size_t max_len = 64) {
    require_nonempty(w);
    require_admissible(w, a);
    if (w.size() > max_len)
        throw std::length_error("is_strict_sesquipower_of_anti_lyndon: input exceeds cap of " +
                                std::to_string(max_len));
    const std::size_t n = w.size();
    const alphabet inv = a.inverse();
    for (std::size_t root = 1; root <= n; ++root) {
        // w = (uv)^k u with |uv| = root forces k = n/root, |u| = n%root
        if (n / root < 1) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + root < n; ++i)
            if (w[i] != w[i + root]) { periodic = false; break; }
        if (!periodic) continue;
        if (detail::is_lyndon_ranked(w.substr(0, root), inv)) return true;
    }
    return false;
}

} // namespace ilf

#endif
