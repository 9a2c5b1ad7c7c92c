#ifndef ILF_RECORD_READER_HPP
#define ILF_RECORD_READER_HPP

#include <istream>
#include <stdexcept>
#include <string>

namespace ilf {

struct record {
    std::string id;
    std::string data;
};

enum class input_format { raw, fasta };

// Streams records from raw text (one record per line, ids are 1-based line
// numbers) or FASTA ('>' header lines delimit records; sequence lines are
// concatenated byte for byte, case preserved). Records may come out empty;
// the caller decides whether to warn and skip.
class record_reader {
public:
    record_reader(std::istream& in, input_format fmt) : in_(in), fmt_(fmt) {}

    bool next(record& out) {
        return fmt_ == input_format::raw ? next_raw(out) : next_fasta(out);
    }

private:
    static void strip_cr(std::string& line) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
    }

    bool next_raw(record& out) {
        std::string line;
        if (!std::getline(in_, line)) return false;
        strip_cr(line);
        out.id = std::to_string(++count_);
        out.data = std::move(line);
        return true;
    }

    bool next_fasta(record& out) {
        std::string line;
        if (!have_header_) {
            while (std::getline(in_, line)) {
                strip_cr(line);
                if (line.empty()) continue;
                if (line[0] != '>')
                    throw std::runtime_error("fasta: sequence data before the first '>' header");
                header_ = line.substr(1);
                have_header_ = true;
                break;
            }
            if (!have_header_) return false;
        }
        out.id = header_;
        out.data.clear();
        have_header_ = false;
        while (std::getline(in_, line)) {
            strip_cr(line);
            if (!line.empty() && line[0] == '>') {
                header_ = line.substr(1);
                have_header_ = true;
                break;
            }
            out.data += line;
        }
        return true;
    }

    std::istream& in_;
    input_format fmt_;
    std::size_t count_ = 0;
    std::string header_;
    bool have_header_ = false;
};

} // namespace ilf

#endif
