#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tacsim/error.hpp"

// Locale-independent number formatting and tokenizing shared by the text
// formats.

namespace tacsim {

namespace text {

// Fixed-point rendering; negative zero prints without a sign.
inline std::string fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw Error("cannot format number");
  std::string s(buf.data(), end);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) {
      out.push_back(line.substr(i));
      break;
    }
    out.push_back(line.substr(i, j - i));
    i = j + 1;
    if (i == line.size()) out.push_back({});
  }
  return out;
}

inline double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v, std::chars_format::fixed);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw FormatError(line, "malformed number '" + std::string(tok) + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw FormatError(line, "malformed integer '" + std::string(tok) + "'");
  }
  return v;
}

// Rounds a value that was written with 4 decimals to 2 decimals, half away
// from zero, working on the exact decimal digits.
inline double round_4_to_2(double v) {
  const long long ticks = std::llround(v * 10000.0);
  const long long mag = ticks < 0 ? -ticks : ticks;
  const long long cents = (mag + 50) / 100;
  return static_cast<double>(ticks < 0 ? -cents : cents) / 100.0;
}

// Reads lines, tracking 1-based numbers. A missing final LF is accepted.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') throw FormatError(number_, "CR line endings are not allowed");
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

inline void expect_fields(const std::vector<std::string_view>& f, std::size_t n, std::size_t line,
                          std::string_view what) {
  if (f.size() != n) {
    throw FormatError(line, std::string(what) + ": expected " + std::to_string(n) + " fields, got " +
                                std::to_string(f.size()));
  }
}

}  // namespace text

}  // namespace tacsim
