#ifndef ILF_ALPHABET_HPP
#define ILF_ALPHABET_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ilf {

inline unsigned char uc(char c) { return static_cast<unsigned char>(c); }

// A total order over a finite set of byte symbols.
//
// Ranks are dense and 0-based: for k admissible symbols the ranks are a
// permutation of 0..k-1. Bytes outside the alphabet rank as -1 and are
// rejected by every operation that takes words. The default alphabet is the
// natural byte order over all 256 values.
class alphabet {
public:
    alphabet() : symbols_(256, '\0'), size_(256) {
        for (int c = 0; c < 256; ++c) {
            rank_[c] = static_cast<int>(c);
            symbols_[static_cast<std::size_t>(c)] = static_cast<char>(c);
        }
    }

    // Custom order: `symbols` lists the admissible symbols in increasing
    // order (the text format used by the CLI, e.g. "abcd" means a<b<c<d).
    // Duplicate symbols are an error.
    explicit alphabet(std::string_view symbols) : symbols_(symbols), size_(symbols.size()) {
        if (symbols.empty())
            throw std::invalid_argument("alphabet: symbol list is empty");
        rank_.fill(-1);
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            const unsigned char c = uc(symbols[i]);
            if (rank_[c] != -1)
                throw std::invalid_argument("alphabet: duplicate symbol '" + std::string(1, symbols[i]) + "'");
            rank_[c] = static_cast<int>(i);
        }
    }

    static alphabet byte_order() { return alphabet(); }

    std::size_t size() const { return size_; }
    bool contains(unsigned char c) const { return rank_[c] >= 0; }
    // Rank of a symbol, -1 when the byte is not admissible.
    int rank(unsigned char c) const { return rank_[c]; }
    const std::string& symbols() const { return symbols_; }

    // The derived inverse alphabet: rank_inv(a) = k-1-rank(a).
    alphabet inverse() const {
        return alphabet(std::string(symbols_.rbegin(), symbols_.rend()));
    }

private:
    std::array<int, 256> rank_{};
    std::string symbols_;
    std::size_t size_;
};

// Factorizations and predicates are defined on nonempty words only.
inline void require_nonempty(std::string_view w) {
    if (w.empty()) throw std::domain_error("empty word");
}

// Out-of-alphabet bytes are a hard error, never a silent extension.
// Positions in the message are 1-based.
inline void require_admissible(std::string_view w, const alphabet& a) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!a.contains(uc(w[i])))
            throw std::invalid_argument("inadmissible byte 0x" + [](unsigned char c) {
                static const char* hex = "0123456789abcdef";
                return std::string{hex[c >> 4], hex[c & 0xf]};
            }(uc(w[i])) + " at position " + std::to_string(i + 1));
}

// Relation of two words under a lexicographic order. Exactly one variant
// holds for any pair; x precedes y iff the result is proper_prefix or
// less_sharp, and less_sharp is the "sharply less" relation (x before y at
// the first mismatching symbol).
enum class lex_relation { equal, proper_prefix, has_proper_prefix, less_sharp, greater_sharp };

enum class order_kind { lex, inv_lex };

namespace detail {

// Core comparison; callers validated admissibility already.
inline lex_relation compare_ranked(std::string_view x, std::string_view y, const alphabet& a) {
    const std::size_t m = x.size() < y.size() ? x.size() : y.size();
    for (std::size_t i = 0; i < m; ++i) {
        const int rx = a.rank(uc(x[i]));
        const int ry = a.rank(uc(y[i]));
        if (rx != ry) return rx < ry ? lex_relation::less_sharp : lex_relation::greater_sharp;
    }
    if (x.size() == y.size()) return lex_relation::equal;
    return x.size() < y.size() ? lex_relation::proper_prefix : lex_relation::has_proper_prefix;
}

inline bool precedes_ranked(std::string_view x, std::string_view y, const alphabet& a) {
    const lex_relation r = compare_ranked(x, y, a);
    return r == lex_relation::proper_prefix || r == lex_relation::less_sharp;
}

inline bool sharply_less_ranked(std::string_view x, std::string_view y, const alphabet& a) {
    return compare_ranked(x, y, a) == lex_relation::less_sharp;
}

} // namespace detail

inline lex_relation compare_lex(std::string_view x, std::string_view y, const alphabet& a) {
    require_admissible(x, a);
    require_admissible(y, a);
    return detail::compare_ranked(x, y, a);
}

// Comparison under the inverse alphabet.
inline lex_relation compare_inv_lex(std::string_view x, std::string_view y, const alphabet& a) {
    require_admissible(x, a);
    require_admissible(y, a);
    return detail::compare_ranked(x, y, a.inverse());
}

inline bool precedes(std::string_view x, std::string_view y, const alphabet& a) {
    const lex_relation r = compare_lex(x, y, a);
    return r == lex_relation::proper_prefix || r == lex_relation::less_sharp;
}

inline bool sharply_less(std::string_view x, std::string_view y, const alphabet& a) {
    return compare_lex(x, y, a) == lex_relation::less_sharp;
}

// true iff no proper nonempty prefix of w is also a suffix of w.
inline bool is_border_free(std::string_view w) {
    require_nonempty(w);
    std::vector<std::size_t> f(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = f[k - 1];
        if (w[i] == w[k]) ++k;
        f[i] = k;
    }
    return f.back() == 0;
}

} // namespace ilf

#endif
