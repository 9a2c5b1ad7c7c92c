// Command-line frontend for the factorization library: factorize, check,
// verify and suffix-sort over raw or FASTA input.
//
// Exit codes: 0 success, 1 verification or predicate failure, 2 usage error,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ilf/ilf.hpp"
#include "ilf/record_reader.hpp"
#include "ilf/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct common_opts {
    std::string input = "-";
    std::string format = "raw";
    std::string alphabet_symbols;
    std::string output = "text";
};

void add_common(CLI::App* cmd, common_opts& o) {
    cmd->add_option("input", o.input, "input file, or '-' for standard input");
    cmd->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"raw", "fasta"}))
        ->capture_default_str();
    cmd->add_option("--alphabet", o.alphabet_symbols,
                    "symbols in increasing order, e.g. 'abcd' for a<b<c<d "
                    "(default: natural byte order)");
    cmd->add_option("--output", o.output, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

ilf::alphabet make_alphabet(const common_opts& o) {
    if (o.alphabet_symbols.empty()) return ilf::alphabet::byte_order();
    return ilf::alphabet(o.alphabet_symbols);
}

ilf::input_format make_format(const common_opts& o) {
    return o.format == "fasta" ? ilf::input_format::fasta : ilf::input_format::raw;
}

// Walks every record, skipping (and warning about) empty ones.
// The visitor returns false to flag a predicate/verification failure.
template <typename Fn>
int for_each_record(const common_opts& o, Fn&& fn) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (o.input != "-") {
        file.open(o.input, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << o.input << "'\n";
            return exit_io;
        }
        in = &file;
    }
    ilf::record_reader reader(*in, make_format(o));
    ilf::record rec;
    std::size_t seen = 0;
    bool all_ok = true;
    while (reader.next(rec)) {
        ++seen;
        if (rec.data.empty()) {
            std::cerr << "warning: record " << rec.id << " is empty, skipped\n";
            continue;
        }
        try {
            if (!fn(rec)) all_ok = false;
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("record " + rec.id + ": " + e.what());
        } catch (const std::length_error& e) {
            throw std::length_error("record " + rec.id + ": " + e.what());
        }
    }
    if (seen == 0) std::cerr << "warning: no records in input\n";
    if (in->bad()) {
        std::cerr << "error: read failure on '" << o.input << "'\n";
        return exit_io;
    }
    return all_ok ? exit_ok : exit_fail;
}

int run_factorize(const common_opts& o, const std::string& mode, bool show_factors) {
    const ilf::alphabet alpha = make_alphabet(o);
    return for_each_record(o, [&](const ilf::record& rec) {
        ilf::factorization f = mode == "cfl"    ? ilf::cfl(rec.data, alpha)
                               : mode == "cfl-in" ? ilf::cfl_in(rec.data, alpha)
                                                  : ilf::icfl(rec.data, alpha);
        if (o.output == "json") {
            std::cout << ilf::to_json_line(ilf::make_report(rec.id, f, show_factors)) << '\n';
        } else {
            const auto factors = f.factors();
            for (std::size_t i = 0; i < factors.size(); ++i)
                std::cout << (i ? "|" : "") << factors[i];
            std::cout << '\n';
        }
        return true;
    });
}

int run_check(const common_opts& o, const std::string& predicate, std::size_t cap) {
    const ilf::alphabet alpha = make_alphabet(o);
    return for_each_record(o, [&](const ilf::record& rec) {
        bool value = false;
        if (predicate == "lyndon")
            value = ilf::is_lyndon(rec.data, alpha);
        else if (predicate == "anti-lyndon")
            value = ilf::is_anti_lyndon(rec.data, alpha);
        else if (predicate == "inverse-lyndon")
            value = ilf::is_inverse_lyndon(rec.data, alpha);
        else
            value = ilf::is_strict_sesquipower_of_anti_lyndon(rec.data, alpha, cap);
        if (o.output == "json") {
            nlohmann::ordered_json j;
            j["id"] = rec.id;
            j["predicate"] = predicate;
            j["value"] = value;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << rec.id << '\t' << (value ? "true" : "false") << '\n';
        }
        return value;
    });
}

int run_verify(const common_opts& o, std::size_t cap, bool inject_fault) {
    const ilf::alphabet alpha = make_alphabet(o);
    return for_each_record(o, [&](const ilf::record& rec) {
        const std::string_view w = rec.data;
        ilf::factorization f = ilf::icfl(w, alpha);

        if (inject_fault) {
            // self-test: corrupt one boundary so the checks below must trip
            std::vector<std::size_t> ends = f.ends();
            if (ends.size() >= 2)
                ends.erase(ends.begin());  // fuse the first two factors
            else if (w.size() >= 2)
                ends.insert(ends.begin(), 1);  // cut a single-factor word
            else
                std::cerr << "warning: record " << rec.id << " too short for fault injection\n";
            f = ilf::factorization(w, std::move(ends), ilf::factorization_kind::custom);
        }

        std::vector<std::string> issues;
        std::string reassembled;
        for (auto fv : f.factors()) reassembled.append(fv);
        if (reassembled != w) issues.push_back("factors do not reassemble the word");
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!ilf::is_inverse_lyndon(f.factor(i), alpha)) {
                issues.push_back("factor " + std::to_string(i + 1) + " is not an inverse Lyndon word");
                break;
            }
        for (std::size_t i = 1; i < f.size(); ++i)
            if (!ilf::sharply_less(f.factor(i - 1), f.factor(i), alpha)) {
                issues.push_back("factors " + std::to_string(i) + "," + std::to_string(i + 1) +
                                 " are not sharply increasing");
                break;
            }
        if (issues.empty() && !ilf::is_grouping(f, ilf::cfl_in(w, alpha), alpha))
            issues.push_back("factorization is not a grouping of the inverse-order factorization");
        if (issues.empty() && w.size() <= cap) {
            for (std::size_t r = 0; r < f.size() && issues.empty(); ++r)
                for (std::size_t s = r; s < f.size(); ++s)
                    if (!ilf::check_compatibility(w, f, r, s, alpha, ilf::order_kind::inv_lex)) {
                        issues.push_back("factor range " + std::to_string(r + 1) + ".." +
                                         std::to_string(s + 1) + " is not sorting-compatible");
                        break;
                    }
        }

        if (o.output == "json") {
            nlohmann::ordered_json j;
            j["id"] = rec.id;
            j["ok"] = issues.empty();
            j["issues"] = issues;
            std::cout << j.dump() << '\n';
        } else if (issues.empty()) {
            std::cout << rec.id << "\tok\n";
        } else {
            std::cout << rec.id << "\tFAIL";
            for (const auto& s : issues) std::cout << "\t" << s;
            std::cout << '\n';
        }
        return issues.empty();
    });
}

int run_suffix_sort(const common_opts& o, const std::string& mode, std::size_t cap) {
    const ilf::alphabet alpha = make_alphabet(o);
    return for_each_record(o, [&](const ilf::record& rec) {
        const std::string_view w = rec.data;
        if (mode == "naive" && w.size() > cap)
            throw std::length_error("record length exceeds the naive-mode cap of " +
                                    std::to_string(cap));
        std::vector<std::size_t> pos =
            mode == "naive"
                ? ilf::sort_suffixes(w, 0, w.size(), alpha, ilf::order_kind::inv_lex,
                                     ilf::suffix_scope::global)
                : ilf::merge_sort_suffixes(w, ilf::icfl(w, alpha), alpha);
        if (o.output == "json") {
            nlohmann::ordered_json j;
            j["id"] = rec.id;
            j["mode"] = mode;
            auto& arr = j["positions"] = nlohmann::ordered_json::array();
            for (std::size_t p : pos) arr.push_back(p + 1);
            std::cout << j.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < pos.size(); ++i)
                std::cout << (i ? " " : "") << pos[i] + 1;
            std::cout << '\n';
        }
        return true;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverse Lyndon factorization toolkit"};
    app.require_subcommand(1);

    common_opts fo, co, vo, so;
    std::string fmode = "icfl", predicate = "inverse-lyndon", smode = "merge";
    bool show_factors = false, inject_fault = false;
    std::size_t check_cap = 64, verify_cap = 500, sort_cap = 5000;

    CLI::App* cmd_factorize = app.add_subcommand("factorize", "factor each record");
    cmd_factorize->add_option("--mode", fmode, "factorization to compute")
        ->check(CLI::IsMember({"cfl", "cfl-in", "icfl"}))
        ->capture_default_str();
    cmd_factorize->add_flag("--show-factors", show_factors, "include factor strings in json output");
    add_common(cmd_factorize, fo);

    CLI::App* cmd_check = app.add_subcommand("check", "evaluate a word predicate per record");
    cmd_check->add_option("--predicate", predicate, "predicate to test")
        ->check(CLI::IsMember({"lyndon", "anti-lyndon", "inverse-lyndon", "sesquipower"}))
        ->capture_default_str();
    cmd_check->add_option("--cap", check_cap, "length cap for the sesquipower scan")
        ->capture_default_str();
    add_common(cmd_check, co);

    CLI::App* cmd_verify = app.add_subcommand("verify", "verify factorization properties per record");
    cmd_verify->add_option("--cap", verify_cap, "record length cap for the compatibility sub-check")
        ->capture_default_str();
    cmd_verify->add_flag("--inject-fault", inject_fault,
                         "self-test: corrupt a boundary and expect a reported violation");
    add_common(cmd_verify, vo);

    CLI::App* cmd_sort = app.add_subcommand("suffix-sort", "global suffix order under the inverse order");
    cmd_sort->add_option("--mode", smode, "sorting strategy")
        ->check(CLI::IsMember({"naive", "merge"}))
        ->capture_default_str();
    cmd_sort->add_option("--cap", sort_cap, "record length cap for naive mode")
        ->capture_default_str();
    add_common(cmd_sort, so);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cmd_factorize->parsed()) return run_factorize(fo, fmode, show_factors);
        if (cmd_check->parsed()) return run_check(co, predicate, check_cap);
        if (cmd_verify->parsed()) return run_verify(vo, verify_cap, inject_fault);
        return run_suffix_sort(so, smode, sort_cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
}
