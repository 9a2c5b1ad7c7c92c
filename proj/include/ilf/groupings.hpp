#ifndef ILF_GROUPINGS_HPP
#define ILF_GROUPINGS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "ilf/alphabet.hpp"
#include "ilf/factorization.hpp"
#include "ilf/inverse_lyndon.hpp"
#include "ilf/lyndon.hpp"

namespace ilf {

// Partition of the factors of a cfl-in factorization into maximal chains for
// the prefix order: within a chain each factor is a prefix of its
// predecessor, and across a chain boundary the last factor is sharply less
// than the next chain's first.
struct pmc_decomposition {
    std::vector<std::pair<std::size_t, std::size_t>> chains;  // [first, last) factor index ranges
};

namespace detail {

inline bool is_prefix_of(std::string_view p, std::string_view w) {
    return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

} // namespace detail

inline pmc_decomposition pmc_decompose(const factorization& f, const alphabet& a) {
    if (f.kind() != factorization_kind::cfl_in)
        throw std::invalid_argument("pmc_decompose: factorization kind must be cfl-in");
    require_admissible(f.word(), a);
    const alphabet inv = a.inverse();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!detail::is_lyndon_ranked(f.factor(i), inv))
            throw std::invalid_argument("pmc_decompose: factor " + std::to_string(i + 1) +
                                        " is not anti-Lyndon");
        if (i > 0 && detail::precedes_ranked(f.factor(i - 1), f.factor(i), inv))
            throw std::invalid_argument("pmc_decompose: factors are not nonincreasing under the inverse order");
    }

    pmc_decomposition out;
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= f.size(); ++i) {
        if (i < f.size() && detail::is_prefix_of(f.factor(i), f.factor(i - 1))) continue;
        if (i < f.size() && !detail::sharply_less_ranked(f.factor(i - 1), f.factor(i), a))
            throw std::invalid_argument("pmc_decompose: chain boundary is not sharply increasing");
        out.chains.emplace_back(begin, i);
        begin = i;
    }
    return out;
}

// A grouping refines each maximal chain of f_in into consecutive blocks that
// are inverse Lyndon words in sharply increasing order. Candidate boundaries
// must therefore be a subset of f_in's boundaries that still contains every
// chain boundary.
inline bool is_grouping(const factorization& candidate, const factorization& f_in, const alphabet& a) {
    if (candidate.word() != f_in.word())
        throw std::invalid_argument("is_grouping: factorizations disagree on the word");
    const pmc_decomposition pmc = pmc_decompose(f_in, a);
    const std::string_view w = f_in.word();

    // cheap boundary arithmetic first
    const std::vector<std::size_t>& ce = candidate.ends();
    const std::vector<std::size_t>& fe = f_in.ends();
    if (!std::includes(fe.begin(), fe.end(), ce.begin(), ce.end())) return false;
    for (const auto& chain : pmc.chains) {
        const std::size_t chain_end = f_in.end_of(chain.second - 1);
        if (!std::binary_search(ce.begin(), ce.end(), chain_end)) return false;
    }

    for (const auto& chain : pmc.chains) {
        const std::size_t lo = f_in.begin_of(chain.first);
        const std::size_t hi = f_in.end_of(chain.second - 1);
        std::string_view prev{};
        std::size_t block_begin = lo;
        for (std::size_t e : ce) {
            if (e <= lo || e > hi) continue;
            const std::string_view block = w.substr(block_begin, e - block_begin);
            if (!detail::find_prefix_ranked(block, a).inverse_word) return false;
            if (!prev.empty() && !detail::sharply_less_ranked(prev, block, a)) return false;
            prev = block;
            block_begin = e;
        }
    }
    return true;
}

// Every grouping of f_in, produced by enumerating the block partitions of
// each chain independently and crossing them. Exponential in chain length;
// an oracle with a hard cap, not a production path.
inline std::vector<factorization> enumerate_groupings(const factorization& f_in, const alphabet& a,
                                                      std::size_t max_factors = 20) {
    const pmc_decomposition pmc = pmc_decompose(f_in, a);
    if (f_in.size() > max_factors)
        throw std::length_error("enumerate_groupings: factor count exceeds cap of " +
                                std::to_string(max_factors));
    const std::string_view w = f_in.word();

    // per chain, every valid list of block end offsets
    std::vector<std::vector<std::vector<std::size_t>>> chain_options;
    for (const auto& chain : pmc.chains) {
        std::vector<std::vector<std::size_t>> options;
        std::vector<std::size_t> cur;
        const std::size_t lo = f_in.begin_of(chain.first);

        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (from == chain.second) {
                options.push_back(cur);
                return;
            }
            const std::size_t block_begin = cur.empty() ? lo : cur.back();
            for (std::size_t to = from + 1; to <= chain.second; ++to) {
                const std::size_t block_end = f_in.end_of(to - 1);
                const std::string_view block = w.substr(block_begin, block_end - block_begin);
                if (!detail::find_prefix_ranked(block, a).inverse_word) continue;
                if (!cur.empty()) {
                    const std::size_t pb = cur.size() >= 2 ? cur[cur.size() - 2] : lo;
                    const std::string_view prev = w.substr(pb, cur.back() - pb);
                    if (!detail::sharply_less_ranked(prev, block, a)) continue;
                }
                cur.push_back(block_end);
                self(self, to);
                cur.pop_back();
            }
        };
        rec(rec, chain.first);
        chain_options.push_back(std::move(options));
    }

    std::vector<factorization> result;
    std::vector<std::size_t> ends;
    auto cross = [&](auto&& self, std::size_t ci) -> void {
        if (ci == chain_options.size()) {
            result.emplace_back(w, ends, factorization_kind::custom);
            return;
        }
        for (const auto& opt : chain_options[ci]) {
            const std::size_t mark = ends.size();
            ends.insert(ends.end(), opt.begin(), opt.end());
            self(self, ci + 1);
            ends.resize(mark);
        }
    };
    cross(cross, 0);
    return result;
}

} // namespace ilf

#endif
