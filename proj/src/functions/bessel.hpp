// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Terms of the modified spherical Bessel-Hankel product sum
//
//     sum_l (2l+1) j_l(i r y) h_l^(1)(i y)  =  -e^{-y(1-r)} / (y(1-r)),
//
// which converges like r^l/l — hopeless for r near 1 (the r = 0.9999 case
// needs ~10^5 direct terms per ten digits) but linear after condensation.
// The naive product overflows/underflows near l ~ 150, so each term is
// evaluated in the scaled factorization
//
//     a(l) = -(r^l / y) * Jhat_l(r y) * Hnorm_l(y),
//
// where Jhat_l(x) = j_l(ix) (2l+1)!!/(ix)^l is a positive power series in
// x^2 tending to 1 as l grows, and Hnorm_l(y) = e^{-y} times the finite
// Hankel sum normalized to its dominant term (the sum tends to e^{y}, so
// Hnorm also tends to 1), and r^l goes through log space.  Both scaled
// factors are O(1), so nothing overflows at any l.  Everything is real by
// construction, so no imaginary parts ever need purging.

#ifndef CNCT_FUNCTIONS_BESSEL_HPP
#define CNCT_FUNCTIONS_BESSEL_HPP

#include <cmath>
#include <cstdint>

#include "core/scalar.hpp"
#include "core/series.hpp"
#include "util/decimal.hpp"

namespace cnct {

struct bessel_sum_params {
  decimal_value r;  // radius ratio, 0 < r < 1
  double y = 1.0;   // exponential argument, > 0
};

namespace detail {

/// Jhat_l(x) = sum_s (x^2/2)^s / (s! (2l+3)(2l+5)...(2l+2s+1)), the
/// ascending series of j_l(ix) normalized to start at 1.  Converges in a
/// few dozen terms for any fixed x; the index products stay far below
/// 2^53 for l up to 10^7.
inline double bessel_j_hat(std::int64_t l, double x) {
  double t = 1.0;
  double s = 1.0;
  std::int64_t sidx = 0;
  while (true) {
    ++sidx;
    t *= (x * x / 2) /
         static_cast<double>(sidx * (2 * l + 2 * sidx + 1));
    s += t;
    if (t < 1e-18 * s) return s;
  }
}

/// e^{-y} times the finite Hankel sum normalized to its leading term:
/// Hnorm_l(y) = e^{-y} sum_{j=0..l} t_j with t_0 = 1 and
/// t_{j+1} = t_j * 2(l-j) y / ((2l-j)(j+1)).  Tends to e^{-y}*...*e^{y}=1
/// as l -> infinity for fixed y; for l = 0 it is exactly e^{-y}.
inline double bessel_h_norm(std::int64_t l, double y) {
  double t = 1.0;
  double s = 1.0;
  for (std::int64_t jj = 0; jj < l; ++jj) {
    t *= 2.0 * static_cast<double>(l - jj) * y /
         ((2.0 * static_cast<double>(l) - static_cast<double>(jj)) *
          static_cast<double>(jj + 1));
    s += t;
    if (t < 1e-18 * s) break;
  }
  return std::exp(-y) * s;
}

}  // namespace detail

/// Term generator: a(l) = -(e^{l ln r}/y) * Jhat_l(r y) * Hnorm_l(y).
/// All terms are negative (tag monotone-nonpositive).  The scaled factors
/// must stay within [1e-8, 1e8]; leaving that window means the scaling
/// contract was violated, which cannot happen for admissible (r, y) — it is
/// guarded rather than silently mis-summed.
inline series_terms<real> bessel_product_terms(const bessel_sum_params& p) {
  if (!(p.r.hi > 0.0) || !(p.r.hi < 1.0))
    throw domain_error("bessel sum requires 0 < r < 1");
  if (!(p.y > 0.0)) throw domain_error("bessel sum requires y > 0");
  const double lnr = log_compensated(p.r);
  const double x = p.r.hi * p.y;
  const double y = p.y;
  return series_terms<real>(
      [lnr, x, y](std::uint64_t l) {
        const std::int64_t il = static_cast<std::int64_t>(l);
        const double jhat = detail::bessel_j_hat(il, x);
        const double hnorm = detail::bessel_h_norm(il, y);
        if (!(jhat >= 1e-8 && jhat <= 1e8) ||
            !(hnorm >= 1e-8 && hnorm <= 1e8))
          throw overflow_guard_error(
              "bessel scaled factor outside guarded range");
        return -std::exp(static_cast<double>(l) * lnr) / y * jhat * hnorm;
      },
      sign_pattern::monotone_nonpositive);
}

/// Closed form of the full sum's magnitude: e^{-y(1-r)}/(y(1-r)); the series
/// itself sums to the negative of this.  1-r is formed from the compensated
/// argument so the near-cancellation at r close to 1 is exact.
inline double bessel_sum_closed_form(const bessel_sum_params& p) {
  if (!(p.y > 0.0)) throw domain_error("bessel sum requires y > 0");
  const double w = (1.0 - p.r.hi) - p.r.lo;
  if (!(w > 0.0)) throw pole_error("bessel closed form pole at r = 1");
  return std::exp(-p.y * w) / (p.y * w);
}

}  // namespace cnct

#endif  // CNCT_FUNCTIONS_BESSEL_HPP
