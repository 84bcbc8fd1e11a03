#include "lexatom/text_format.hpp"

#include <charconv>

#include "lexatom/errors.hpp"

namespace lexatom {

std::string format_fixed(double value, int decimals) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
    std::string out(buf, res.ptr);
    if (out == "-0." + std::string(decimals, '0')) out.erase(0, 1);
    return out;
}

double parse_double(std::string_view s, const std::string& where) {
    double value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw DataError(where + ": not a number: '" + std::string(s) + "'");
    return value;
}

uint64_t parse_uint(std::string_view s, const std::string& where) {
    uint64_t value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw DataError(where + ": not a count: '" + std::string(s) + "'");
    return value;
}

int64_t parse_int(std::string_view s, const std::string& where) {
    int64_t value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw DataError(where + ": not an integer: '" + std::string(s) + "'");
    return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace lexatom
