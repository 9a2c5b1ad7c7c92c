#ifndef ILF_REPORT_HPP
#define ILF_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilf/factorization.hpp"

namespace ilf {

// Per-record factorization summary. Boundary positions are 1-based (the
// position of each factor's last symbol); statistics are over the factor
// lengths. mean/median are rendered with a fixed 6-decimal format so that
// serialized reports round-trip byte for byte.
struct factor_report {
    std::string id;
    std::string kind;
    std::size_t count = 0;
    std::vector<std::size_t> lengths;
    std::size_t min_len = 0;
    std::size_t max_len = 0;
    double mean_len = 0.0;
    double median_len = 0.0;
    std::vector<std::size_t> boundaries;
    std::vector<std::string> factors;  // filled only on request
};

inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

inline factor_report make_report(std::string id, const factorization& f, bool with_factors) {
    factor_report r;
    r.id = std::move(id);
    r.kind = std::string(kind_name(f.kind()));
    r.count = f.size();
    r.lengths.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r.lengths.push_back(f.end_of(i) - f.begin_of(i));
    r.min_len = *std::min_element(r.lengths.begin(), r.lengths.end());
    r.max_len = *std::max_element(r.lengths.begin(), r.lengths.end());
    double sum = 0;
    for (std::size_t l : r.lengths) sum += static_cast<double>(l);
    r.mean_len = sum / static_cast<double>(r.count);
    std::vector<std::size_t> sorted = r.lengths;
    std::sort(sorted.begin(), sorted.end());
    r.median_len = r.count % 2 == 1
                       ? static_cast<double>(sorted[r.count / 2])
                       : (static_cast<double>(sorted[r.count / 2 - 1]) +
                          static_cast<double>(sorted[r.count / 2])) / 2.0;
    r.boundaries = f.ends();  // 0-based exclusive end == 1-based last position
    if (with_factors)
        for (auto fv : f.factors()) r.factors.emplace_back(fv);
    return r;
}

// One compact JSON object per line, fields in fixed order.
inline std::string to_json_line(const factor_report& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["kind"] = r.kind;
    j["count"] = r.count;
    j["lengths"] = r.lengths;
    j["min"] = r.min_len;
    j["max"] = r.max_len;
    j["mean"] = fixed6(r.mean_len);
    j["median"] = fixed6(r.median_len);
    j["boundaries"] = r.boundaries;
    if (!r.factors.empty()) j["factors"] = r.factors;
    return j.dump();
}

} // namespace ilf

#endif
