// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Compensated parsing of decimal literals.  A short decimal like 0.95 is not
// representable in binary; the rounding residual (~1e-17 relative) matters
// when the value is raised to powers of order 10^4, where it is amplified by
// the exponent.  parse_decimal returns the rounded double together with the
// exact residual so downstream code can evaluate log(hi) + lo/hi and keep
// large-index terms correct to full precision.

#ifndef CNCT_UTIL_DECIMAL_HPP
#define CNCT_UTIL_DECIMAL_HPP

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "core/scalar.hpp"

namespace cnct {

/// hi is the correctly rounded double for the literal; lo is the residual,
/// so that the written decimal equals hi + lo exactly (up to one rounding in
/// the residual itself, i.e. to ~1e-33 relative).
struct decimal_value {
  double hi = 0.0;
  double lo = 0.0;
};

/// Parse "[+-]digits[.digits]" into (hi, lo).  The literal is read as an
/// integer p over a power of ten q, both exactly representable (mantissas up
/// to 18 digits, powers of ten up to 10^22).  Then hi = fl(p/q) and the
/// residual is recovered with one fused multiply-add:
///
///     lo = (p - hi*q) / q.
///
/// Longer literals fall back to strtod with a zero residual; scientific
/// notation is accepted through the same fallback.
inline decimal_value parse_decimal(const std::string& text) {
  const char* s = text.c_str();
  const char* p = s;
  bool negative = false;
  if (*p == '+' || *p == '-') {
    negative = (*p == '-');
    ++p;
  }

  std::uint64_t digits = 0;
  int ndigits = 0;
  int frac = 0;
  bool seen_dot = false;
  bool any = false;
  bool fits = true;
  for (; *p != '\0'; ++p) {
    if (*p == '.') {
      if (seen_dot) { fits = false; break; }
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(*p))) { fits = false; break; }
    any = true;
    if (ndigits < 18) {
      digits = digits * 10 + static_cast<std::uint64_t>(*p - '0');
      ++ndigits;
      if (seen_dot) ++frac;
    } else {
      fits = false;
      break;
    }
  }
  if (!any) fits = false;

  if (!fits || frac > 22) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || (end != nullptr && *end != '\0'))
      throw domain_error("invalid numeric literal: " + text);
    return {v, 0.0};
  }

  const double pnum = static_cast<double>(digits);  // exact: < 10^18 < 2^63
  const double q = std::pow(10.0, frac);            // exact for frac <= 22
  const double hi = pnum / q;
  const double lo = -std::fma(hi, q, -pnum) / q;
  if (negative) return {-hi, -lo};
  return {hi, lo};
}

/// log of a compensated positive value: log(hi + lo) to full precision via
/// the first-order correction lo/hi (the residual is ~1e-17 relative, so the
/// quadratic term is far below double rounding).
inline double log_compensated(const decimal_value& z) {
  if (!(z.hi > 0.0)) throw domain_error("logarithm of a non-positive value");
  return std::log(z.hi) + z.lo / z.hi;
}

}  // namespace cnct

#endif  // CNCT_UTIL_DECIMAL_HPP
