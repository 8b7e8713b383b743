#pragma once

#include <boost/rational.hpp>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace fuzzytop {

/// Exact rational scalar used for membership degrees. boost::rational keeps
/// the value in lowest terms with a positive denominator, so equality is
/// structural. No floating point is used anywhere in the library.
using Rat = boost::rational<std::int64_t>;

inline const Rat& rat_zero() {
  static const Rat v(0);
  return v;
}

inline const Rat& rat_one() {
  static const Rat v(1);
  return v;
}

/// 1 - v, the complement of a membership degree.
inline Rat degree_complement(const Rat& v) { return rat_one() - v; }

/// True iff v lies in the closed unit interval.
inline bool is_degree(const Rat& v) { return v >= rat_zero() && v <= rat_one(); }

namespace detail {

inline bool parse_int64(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    i = 1;
    if (text.size() == 1) return false;
  }
  std::int64_t value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    if (value > (INT64_MAX - (c - '0')) / 10) return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace detail

/// Parses "p/q" or a bare integer (optionally negative). Returns nullopt on
/// anything else, including decimal notation. The unit-interval range is not
/// checked here; callers that need degrees apply is_degree separately.
inline std::optional<Rat> try_parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    std::int64_t n = 0;
    if (!detail::parse_int64(text, n)) return std::nullopt;
    return Rat(n);
  }
  std::int64_t num = 0;
  std::int64_t den = 0;
  if (!detail::parse_int64(text.substr(0, slash), num)) return std::nullopt;
  if (!detail::parse_int64(text.substr(slash + 1), den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  return Rat(num, den);
}

/// Like try_parse_rational but throws SyntaxError with a reason. Decimal
/// notation gets a dedicated message: degrees are exact rationals.
inline Rat parse_rational(std::string_view text) {
  if (auto v = try_parse_rational(text)) return *v;
  const std::string shown(text);
  if (text.find('.') != std::string_view::npos)
    throw SyntaxError("'" + shown +
                      "': decimal notation is not accepted; write an exact "
                      "rational such as 1/2");
  throw SyntaxError("'" + shown +
                    "' is not a rational literal (expected p/q with q > 0, or "
                    "an integer)");
}

/// Lowest-terms rendering: "0", "1", "1/2", ...
inline std::string to_string(const Rat& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

}  // namespace fuzzytop
