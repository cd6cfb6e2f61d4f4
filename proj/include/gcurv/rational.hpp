#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "gcurv/error.hpp"

namespace gcurv {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// Rounds to 3 decimal places, halves away from zero, exactly.
inline double round3(const Rational& r) {
  const std::int64_t num = r.numerator() < 0 ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();
  const std::int64_t q = (num * 2000 + den) / (2 * den);
  const double mag = static_cast<double>(q) / 1000.0;
  return r.numerator() < 0 ? -mag : mag;
}

inline double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

namespace detail {

inline bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty() || s.size() > 15) return false;
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "a/b", "a" or a decimal "0.25" into an exact rational. Decimals
/// may carry at most six fractional digits, so denominators stay <= 10^6.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  const std::string shown(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    if (!detail::parse_int(detail::trim(s.substr(0, slash)), num) ||
        !detail::parse_int(detail::trim(s.substr(slash + 1)), den))
      throw ParseError("not a fraction: '" + shown + "'");
    if (den == 0) throw ParseError("zero denominator in '" + shown + "'");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 6)
      throw ParseError("more than 6 decimal places in '" + shown + "'");
    std::int64_t w = 0;
    std::int64_t f = 0;
    if ((!whole.empty() && !detail::parse_int(whole, w)) ||
        (!frac.empty() && !detail::parse_int(frac, f)) || (whole.empty() && frac.empty()))
      throw ParseError("not a decimal: '" + shown + "'");
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = w * den + f;
  } else if (!detail::parse_int(s, num)) {
    throw ParseError("not a number: '" + shown + "'");
  }
  Rational r(num, den);
  return negative ? -r : r;
}

}  // namespace gcurv
