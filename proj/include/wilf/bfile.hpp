#ifndef WILF_BFILE_HPP
#define WILF_BFILE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wilf/asymptotics.hpp"
#include "wilf/big.hpp"
#include "wilf/error.hpp"

namespace wilf {

/// One OEIS b-file: "index value" rows with contiguous indices.
struct BFile {
    struct Entry {
        std::uint64_t index;
        BigCount value;
    };

    std::vector<Entry> entries;
    std::string source;

    std::uint64_t offset() const { return entries.front().index; }
    std::uint64_t last_index() const { return entries.back().index; }
};

/// Parses b-file text. '#' lines and blank lines are skipped. Throws
/// parse_error with the line number on malformed rows and gap_error on
/// non-contiguous indices.
inline BFile parse_bfile(std::string_view text, std::string source = "") {
    if (text.empty()) throw Error(errc::parse_error, "empty b-file");
    BFile bf;
    bf.source = std::move(source);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string_view::npos || line[start] == '#') continue;
        std::istringstream row{std::string(line)};
        long long index;
        std::string value_text;
        if (!(row >> index >> value_text) || index < 0)
            throw Error(errc::parse_error,
                        "malformed row at line " + std::to_string(line_no));
        std::string trailing;
        if (row >> trailing)
            throw Error(errc::parse_error,
                        "trailing garbage at line " + std::to_string(line_no));
        BigCount value;
        try {
            value = BigCount(value_text);
        } catch (const std::exception&) {
            throw Error(errc::parse_error,
                        "malformed value at line " + std::to_string(line_no));
        }
        if (value < 0)
            throw Error(errc::parse_error,
                        "negative value at line " + std::to_string(line_no));
        if (!bf.entries.empty() &&
            static_cast<std::uint64_t>(index) != bf.entries.back().index + 1)
            throw Error(errc::gap_error,
                        "index gap at line " + std::to_string(line_no) +
                            ": expected " +
                            std::to_string(bf.entries.back().index + 1) +
                            ", got " + std::to_string(index));
        bf.entries.push_back({static_cast<std::uint64_t>(index), value});
    }
    if (bf.entries.empty())
        throw Error(errc::parse_error, "b-file contains no data rows");
    return bf;
}

/// Emits "index SP value LF" rows, bit-exact b-file format.
inline std::string format_bfile(const BFile& bf) {
    std::string out;
    for (const auto& e : bf.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.value.str();
        out += '\n';
    }
    return out;
}

struct VerifyReport {
    bool ok = true;
    std::uint64_t checked = 0;
    double seconds = 0.0;
    // set on the first mismatch
    std::optional<std::uint64_t> mismatch_n;
    BigCount expected;
    BigCount got;
};

/// Recomputes f(n) for every covered n <= upto and compares row-for-row.
/// Throws coverage_error when upto exceeds the b-file range.
inline VerifyReport verify(const BFile& bfile, std::uint64_t upto,
                           const Counter& counter) {
    if (upto > bfile.last_index())
        throw Error(errc::coverage_error,
                    "b-file ends at " + std::to_string(bfile.last_index()) +
                        ", requested " + std::to_string(upto));
    VerifyReport report;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : bfile.entries) {
        if (e.index > upto) break;
        BigCount got = counter(e.index);
        ++report.checked;
        if (got != e.value) {
            report.ok = false;
            report.mismatch_n = e.index;
            report.expected = e.value;
            report.got = got;
            break;
        }
    }
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

} // namespace wilf

#endif // WILF_BFILE_HPP
