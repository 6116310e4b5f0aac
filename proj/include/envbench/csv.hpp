#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace envbench::csv {

// Shortest decimal representation that round-trips the exact double value
// (std::to_chars). All emitted files use this so identical inputs produce
// identical bytes.
std::string format_double(double v);
void append_double(std::string& out, double v);
void append_int(std::string& out, int64_t v);

double parse_double(std::string_view field, bool& ok);
int64_t parse_int(std::string_view field, bool& ok);

// Line-oriented reader for header-first CSV files. No quoting: the formats
// handled here never embed separators. Tolerates CRLF endings.
class Reader {
public:
    explicit Reader(const std::string& path);

    // Line number of the row most recently returned (1-based; header is line 1).
    std::size_t line() const { return line_; }
    const std::string& path() const { return path_; }

    // Returns false at end of input. Fields view into an internal buffer
    // valid until the next call.
    bool next(std::vector<std::string_view>& fields);

private:
    std::string path_;
    std::string data_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

void split_fields(std::string_view row, std::vector<std::string_view>& fields);

// Writes content to path atomically enough for our purposes (truncate +
// write). LF line endings are the caller's responsibility; helpers here
// never emit CR.
void write_file(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

}  // namespace envbench::csv
