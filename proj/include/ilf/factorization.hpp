#ifndef ILF_FACTORIZATION_HPP
#define ILF_FACTORIZATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace ilf {

enum class factorization_kind { cfl, cfl_in, icfl, custom };

inline std::string_view kind_name(factorization_kind k) {
    switch (k) {
        case factorization_kind::cfl: return "cfl";
        case factorization_kind::cfl_in: return "cfl-in";
        case factorization_kind::icfl: return "icfl";
        default: return "custom";
    }
}

// An ordered list of contiguous, nonempty factor spans whose concatenation is
// the word. Factors are stored as end offsets into the word, not as copies,
// so a factorization is O(h) memory for h factors.
//
// The word is held as a view; the caller keeps the underlying text alive.
// Offsets are 0-based internally; user-facing reports translate to the
// 1-based convention.
class factorization {
public:
    factorization(std::string_view word, std::vector<std::size_t> ends, factorization_kind kind)
        : word_(word), ends_(std::move(ends)), kind_(kind) {
        if (ends_.empty())
            throw std::invalid_argument("factorization: no factors");
        std::size_t prev = 0;
        for (std::size_t e : ends_) {
            if (e <= prev) throw std::invalid_argument("factorization: boundaries not strictly increasing");
            prev = e;
        }
        if (ends_.back() != word_.size())
            throw std::invalid_argument("factorization: boundaries do not cover the word");
    }

    std::string_view word() const { return word_; }
    factorization_kind kind() const { return kind_; }
    std::size_t size() const { return ends_.size(); }

    std::size_t begin_of(std::size_t i) const { return i == 0 ? 0 : ends_[i - 1]; }
    std::size_t end_of(std::size_t i) const { return ends_[i]; }

    std::string_view factor(std::size_t i) const {
        if (i >= ends_.size()) throw std::out_of_range("factorization: factor index");
        const std::size_t b = begin_of(i);
        return word_.substr(b, ends_[i] - b);
    }

    std::vector<std::string_view> factors() const {
        std::vector<std::string_view> out;
        out.reserve(ends_.size());
        for (std::size_t i = 0; i < ends_.size(); ++i) out.push_back(factor(i));
        return out;
    }

    const std::vector<std::size_t>& ends() const { return ends_; }

private:
    std::string_view word_;
    std::vector<std::size_t> ends_;
    factorization_kind kind_;
};

} // namespace ilf

#endif
