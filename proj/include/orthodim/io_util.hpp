#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orthodim/error.hpp"

namespace orthodim {

/// FNV-1a 64-bit digest rendered as 16 hex digits. Used to tag inputs in
/// provenance records and manifests.
inline std::string digest_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

// Line reader that skips blank lines and `c` comment lines and tracks line numbers.
class TokenLines {
 public:
  explicit TokenLines(std::istream& in) : in_(in) {}

  /// Next non-comment line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      toks.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) toks.push_back(tok);
      if (toks.empty() || toks[0] == "c") continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_no_); }

  template <class Int>
  Int to_int(const std::string& s) const {
    Int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
    return v;
  }

  double to_double(const std::string& s) const {
    try {
      std::size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) fail("expected a number, got '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("expected a number, got '" + s + "'");
    }
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline void expect_header(TokenLines& lines, std::vector<std::string>& toks, std::string_view kind,
                          std::size_t fields) {
  if (!lines.next(toks)) throw ParseError("missing header 'p " + std::string(kind) + "'", lines.line());
  if (toks.size() != fields + 2 || toks[0] != "p" || toks[1] != kind)
    lines.fail("expected header 'p " + std::string(kind) + "' with " + std::to_string(fields) + " fields");
}

}  // namespace detail
}  // namespace orthodim
