#ifndef ILF_ORACLE_HPP
#define ILF_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ilf/alphabet.hpp"
#include "ilf/factorization.hpp"
#include "ilf/inverse_lyndon.hpp"

// Brute-force reference implementations, rebuilt from the definitions and
// sharing no code with the fast paths they validate. Never run these on
// large inputs.

namespace ilf {

inline bool naive_is_lyndon(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!detail::precedes_ranked(w, w.substr(i), a)) return false;
    return true;
}

inline bool naive_is_inverse_lyndon(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!detail::precedes_ranked(w.substr(i), w, a)) return false;
    return true;
}

namespace detail {

// All pairs (|p|, |p̄|) passing the four defining conditions of a bounded
// right extension. Prefix checks are cached per prefix length since p, p·z'
// and p·p̄ are all prefixes of w.
inline std::vector<std::pair<std::size_t, std::size_t>> naive_bre_candidates(std::string_view w,
                                                                             const alphabet& a) {
    const std::size_t n = w.size();
    std::vector<char> prefix_il(n + 1, 0);
    for (std::size_t m = 1; m <= n; ++m)
        prefix_il[m] = naive_is_inverse_lyndon(w.substr(0, m), a) ? 1 : 0;

    std::vector<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t pl = 1; pl + 1 <= n; ++pl) {
        if (!prefix_il[pl]) continue;  // p must itself be an inverse Lyndon word
        const std::string_view p = w.substr(0, pl);
        for (std::size_t bl = 1; pl + bl <= n; ++bl) {
            const std::string_view pbar = w.substr(pl, bl);
            if (!sharply_less_ranked(p, pbar, a)) continue;        // (4)
            if (prefix_il[pl + bl]) continue;                      // (3) p·p̄ not inverse Lyndon
            bool inner_ok = true;                                  // (2) every p·z' inverse Lyndon
            for (std::size_t z = 1; z < bl && inner_ok; ++z)
                if (!prefix_il[pl + z]) inner_ok = false;
            if (!inner_ok) continue;
            if (!naive_is_inverse_lyndon(pbar, a)) continue;       // (1)
            found.emplace_back(pl, bl);
        }
    }
    return found;
}

} // namespace detail

// Exhaustive search for the bounded right extension. none means w is an
// inverse Lyndon word; more than one candidate would contradict uniqueness
// and is reported as a logic error.
inline std::optional<bre_result> naive_pref_bre(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    const auto found = detail::naive_bre_candidates(w, a);
    if (found.empty()) return std::nullopt;
    if (found.size() > 1)
        throw std::logic_error("naive_pref_bre: bounded right extension is not unique");
    return bre_result{found[0].first, found[0].second, found[0].second - 1};
}

// Candidate count without the uniqueness assumption, for property tests.
inline std::size_t naive_pref_bre_candidate_count(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    return detail::naive_bre_candidates(w, a).size();
}

namespace detail {

inline bool is_prefix_of_oracle(std::string_view p, std::string_view w) {
    return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

inline std::vector<std::size_t> naive_icfl_lengths(std::string_view v, const alphabet& a) {
    if (naive_is_inverse_lyndon(v, a)) return {v.size()};
    const auto br = naive_pref_bre(v, a);
    if (!br) throw std::logic_error("naive_icfl: no bounded right extension for a non inverse Lyndon word");
    std::vector<std::size_t> rest = naive_icfl_lengths(v.substr(br->p_len), a);

    const std::string_view pbar = v.substr(br->p_len, br->pbar_len);
    const std::string_view m1 = v.substr(br->p_len, rest.front());
    if (is_prefix_of_oracle(pbar, m1)) {
        rest.insert(rest.begin(), br->p_len);
    } else if (is_prefix_of_oracle(m1, pbar.substr(0, pbar.size() - 1))) {
        rest.front() += br->p_len;
    } else {
        throw std::logic_error("naive_icfl: extension and first factor are prefix-incomparable");
    }
    return rest;
}

} // namespace detail

// Literal recursion of the canonical factorization's definition, driven by
// naive_pref_bre. Safe only on capped inputs.
inline factorization naive_icfl(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    const std::vector<std::size_t> lengths = detail::naive_icfl_lengths(w, a);
    std::vector<std::size_t> ends;
    std::size_t acc = 0;
    for (std::size_t len : lengths) ends.push_back(acc += len);
    return factorization(w, std::move(ends), factorization_kind::icfl);
}

// Every factorization of w into inverse Lyndon words in sharply increasing
// order, by backtracking over cut positions.
inline std::vector<factorization> enumerate_inverse_lyndon_factorizations(std::string_view w,
                                                                          const alphabet& a,
                                                                          std::size_t max_len = 20) {
    require_nonempty(w);
    require_admissible(w, a);
    if (w.size() > max_len)
        throw std::length_error("enumerate_inverse_lyndon_factorizations: input exceeds cap of " +
                                std::to_string(max_len));
    std::vector<factorization> result;
    std::vector<std::size_t> ends;
    auto rec = [&](auto&& self, std::size_t off) -> void {
        if (off == w.size()) {
            result.emplace_back(w, ends, factorization_kind::custom);
            return;
        }
        for (std::size_t e = off + 1; e <= w.size(); ++e) {
            const std::string_view m = w.substr(off, e - off);
            if (!naive_is_inverse_lyndon(m, a)) continue;
            if (!ends.empty()) {
                const std::size_t pb = ends.size() >= 2 ? ends[ends.size() - 2] : 0;
                if (!detail::sharply_less_ranked(w.substr(pb, off - pb), m, a)) continue;
            }
            ends.push_back(e);
            self(self, e);
            ends.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

// Repeatedly strip the longest prefix that is a Lyndon word (checked against
// the suffix definition, not by Duval's algorithm).
inline factorization naive_cfl(std::string_view w, const alphabet& a) {
    require_nonempty(w);
    require_admissible(w, a);
    std::vector<std::size_t> ends;
    std::size_t off = 0;
    while (off < w.size()) {
        for (std::size_t len = w.size() - off; len >= 1; --len) {
            if (naive_is_lyndon(w.substr(off, len), a)) {
                off += len;
                ends.push_back(off);
                break;
            }
        }
    }
    return factorization(w, std::move(ends), factorization_kind::cfl);
}

} // namespace ilf

#endif
