#include "envbench/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "envbench/error.hpp"

namespace envbench::csv {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

void append_int(std::string& out, int64_t v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

double parse_double(std::string_view field, bool& ok) {
    double v = 0.0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    ok = res.ec == std::errc() && res.ptr == field.data() + field.size() && !field.empty();
    return v;
}

int64_t parse_int(std::string_view field, bool& ok) {
    int64_t v = 0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    ok = res.ec == std::errc() && res.ptr == field.data() + field.size() && !field.empty();
    return v;
}

Reader::Reader(const std::string& path) : path_(path) {
    data_ = read_file(path);
}

bool Reader::next(std::vector<std::string_view>& fields) {
    if (pos_ >= data_.size()) return false;
    std::size_t end = data_.find('\n', pos_);
    std::size_t stop = (end == std::string::npos) ? data_.size() : end;
    std::string_view row(data_.data() + pos_, stop - pos_);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    pos_ = (end == std::string::npos) ? data_.size() : end + 1;
    ++line_;
    split_fields(row, fields);
    return true;
}

void split_fields(std::string_view row, std::vector<std::string_view>& fields) {
    fields.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t comma = row.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(row.substr(start));
            return;
        }
        fields.push_back(row.substr(start, comma - start));
        start = comma + 1;
    }
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

}  // namespace envbench::csv
