// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Lerch transcendent Phi(z, s, alpha) = sum_n z^n/(alpha+n)^s and the
// polylogarithm Li_s(z) = z Phi(z, s, 1).  Near z = 1 these converge so
// slowly that the raw series is useless (the s = 1, z = 0.99999 case needs
// ~10^5 terms per digit); condensation samples the terms at exponentially
// growing indices instead, so the generators must stay O(1) and accurate at
// arbitrarily large n — hence the log-space power and the compensated
// argument (the decimal 0.99999 is not a binary double; the residual of the
// conversion, amplified by exponents of order 10^6, would otherwise corrupt
// the condensed terms).

#ifndef CNCT_FUNCTIONS_LERCH_HPP
#define CNCT_FUNCTIONS_LERCH_HPP

#include <cmath>
#include <cstdint>

#include "core/scalar.hpp"
#include "core/series.hpp"
#include "util/decimal.hpp"

namespace cnct {

struct lerch_params {
  decimal_value z;     // geometric argument, 0 < z <= 1
  double s = 1.0;      // exponent
  double alpha = 1.0;  // shift, > 0
};

namespace detail {
inline double checked_geometric_log(const decimal_value& z,
                                    const char* what) {
  if (!(z.hi > 0.0))
    throw domain_error(std::string(what) + " requires z > 0");
  if (z.hi > 1.0)
    throw domain_error(std::string(what) + " requires z <= 1");
  return log_compensated(z);
}
}  // namespace detail

/// Terms a(n) = z^n / (alpha+n)^s, evaluated as exp(n ln z) / (alpha+n)^s.
/// All terms are positive for z in (0,1], monotone tag accordingly.
inline series_terms<real> lerch_terms(const lerch_params& p) {
  if (!(p.alpha > 0.0))
    throw domain_error("lerch transcendent requires alpha > 0");
  const double lnz = detail::checked_geometric_log(p.z, "lerch transcendent");
  const double s = p.s;
  const double alpha = p.alpha;
  return series_terms<real>(
      [lnz, s, alpha](std::uint64_t n) {
        const double dn = static_cast<double>(n);
        return std::exp(dn * lnz) / std::pow(alpha + dn, s);
      },
      sign_pattern::monotone_nonnegative);
}

inline series_terms<real> lerch_terms(double z, double s, double alpha) {
  return lerch_terms(lerch_params{decimal_value{z, 0.0}, s, alpha});
}

/// Polylogarithm terms: Li_s(z) = sum_{k>=1} z^k/k^s, zero-based as
/// a(k) = z^{k+1} (k+1)^{-s}.  Li_s(z) = z Phi(z, s, 1) term by term.
inline series_terms<real> polylog_terms(double s, const decimal_value& z) {
  const double lnz = detail::checked_geometric_log(z, "polylogarithm");
  return series_terms<real>(
      [lnz, s](std::uint64_t k) {
        const double dk = static_cast<double>(k);
        return std::exp((dk + 1.0) * lnz) * std::pow(dk + 1.0, -s);
      },
      sign_pattern::monotone_nonnegative);
}

inline series_terms<real> polylog_terms(double s, double z) {
  return polylog_terms(s, decimal_value{z, 0.0});
}

}  // namespace cnct

#endif  // CNCT_FUNCTIONS_LERCH_HPP
