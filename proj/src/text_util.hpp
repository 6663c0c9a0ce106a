#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "twsep/error.hpp"

namespace twsep::detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string at_line(std::size_t line_no, std::string_view msg) {
  return "line " + std::to_string(line_no) + ": " + std::string(msg);
}

inline long long parse_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError(at_line(line_no, "expected an integer, got '" + std::string(token) + "'"));
  }
  return value;
}

}  // namespace twsep::detail
