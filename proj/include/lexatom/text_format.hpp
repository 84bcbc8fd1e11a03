#pragma once

// Locale-independent numeric formatting/parsing (C-style, via to_chars).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexatom {

std::string format_fixed(double value, int decimals);

double parse_double(std::string_view s, const std::string& where);
uint64_t parse_uint(std::string_view s, const std::string& where);
int64_t parse_int(std::string_view s, const std::string& where);

std::vector<std::string_view> split_tabs(std::string_view line);

// Strips a trailing '\r' so CRLF input parses like LF.
void chomp(std::string& line);

}  // namespace lexatom
