// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Generalized hypergeometric series p+1Fp(a_1..a_{p+1}; b_1..b_p; z) with
// terms a(m) = prod(a_i)_m / prod(b_j)_m * z^m / m!.  Condensation samples
// terms at indices up to ~2^60, so Pochhammer ratios are evaluated through
// log-gamma differences there; small indices use the exact running product.
// The lnGamma(x+d) - lnGamma(x) difference is computed by a dedicated
// routine (shift to x >= 12, then Stirling with Bernoulli corrections)
// because subtracting two large lnGamma values would lose the digits the
// transforms are trying to recover.

#ifndef CNCT_FUNCTIONS_HYPERGEOMETRIC_HPP
#define CNCT_FUNCTIONS_HYPERGEOMETRIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "core/scalar.hpp"
#include "core/series.hpp"
#include "util/decimal.hpp"

namespace cnct {

/// lnGamma(x) for x > 0.  The platform implementation is accurate to a few
/// ulp here, well inside the 2e-15 relative budget of this library.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("log_gamma requires x > 0");
  return std::lgamma(x);
}

namespace detail {

// Bernoulli-series correction of Stirling's formula:
// lnGamma(x) = (x-1/2)ln x - x + ln(2 pi)/2 + stirling_corr(x), x >= 12.
inline double stirling_corr(double x) {
  static constexpr double kB[8] = {
      1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
      5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
  double s = 0.0;
  const double x2 = x * x;
  double xp = x;
  for (int n = 1; n <= 8; ++n) {
    s += kB[n - 1] / (static_cast<double>((2 * n) * (2 * n - 1)) * xp);
    xp *= x2;
  }
  return s;
}

/// lnGamma(x + delta) - lnGamma(x) without cancellation.  Both arguments
/// are first shifted above 12 via the recurrence Gamma(x+1) = x Gamma(x),
/// then the difference of Stirling expansions is formed analytically:
/// the (x-1/2)ln x terms combine through log1p(delta/x), so nothing large
/// is ever subtracted from anything large.
inline double lgamma_delta(double x, double delta) {
  int shift = 0;
  while (x + shift < 12.0 || x + delta + shift < 12.0) ++shift;
  double corr = 0.0;
  for (int i = 0; i < shift; ++i)
    corr -= std::log((x + delta + i) / (x + i));
  const double xx = x + shift;
  const double main = delta * std::log(xx + delta) +
                      (xx - 0.5) * std::log1p(delta / xx) - delta;
  return main + stirling_corr(xx + delta) - stirling_corr(xx) + corr;
}

inline bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

}  // namespace detail

struct hyp_params {
  std::vector<double> nums;  // numerator parameters a_1..a_{p+1}
  std::vector<double> dens;  // denominator parameters b_1..b_p
  decimal_value z;           // argument, 0 < z <= 1
};

/// Term generator for p+1Fp.  a(0) = 1 exactly.  Indices m <= 64 use the
/// exact running product (signs included); larger m go through log space
/// with the overall sign fixed by the count of negative Pochhammer factors,
/// which is constant once m exceeds every |parameter|.
inline series_terms<real> pfq_terms(const hyp_params& p) {
  if (p.nums.size() != p.dens.size() + 1)
    throw domain_error(
        "hypergeometric series needs one more numerator than denominator "
        "parameter");
  if (!(p.z.hi > 0.0) || p.z.hi > 1.0)
    throw domain_error("hypergeometric argument must lie in (0, 1]");
  for (double b : p.dens)
    if (detail::is_nonpositive_integer(b)) throw pole_error("parameter pole");
  // Terminating case: a nonpositive-integer numerator zeroes all terms with
  // m > -a.  Non-integer parameters must stay above -65 so the log branch
  // (entered at m >= 65) sees positive Gamma arguments throughout.
  std::uint64_t cut = UINT64_MAX;  // a(m) = 0 for m >= cut
  long negative_factors = 0;
  bool all_positive = true;
  for (double a : p.nums) {
    if (detail::is_nonpositive_integer(a)) {
      cut = std::min<std::uint64_t>(cut, static_cast<std::uint64_t>(-a) + 1);
    } else if (a < 0.0) {
      if (a <= -65.0)
        throw domain_error("numerator parameter below -65 unsupported");
      negative_factors += static_cast<long>(std::ceil(-a));
    }
    all_positive = all_positive && a > 0.0;
  }
  for (double b : p.dens) {
    if (b < 0.0) {
      if (b <= -65.0)
        throw domain_error("denominator parameter below -65 unsupported");
      negative_factors += static_cast<long>(std::ceil(-b));
    }
    all_positive = all_positive && b > 0.0;
  }
  const double sign = (negative_factors % 2 != 0) ? -1.0 : 1.0;

  const double lnz = log_compensated(p.z);
  const double ez = std::exp(lnz);
  // Sorted numerators paired with sorted denominators (the term's 1/m! is
  // the implicit extra denominator parameter 1): pairing nearby magnitudes
  // keeps every lgamma_delta shift small.
  std::vector<double> ns = p.nums;
  std::vector<double> ds = p.dens;
  ds.push_back(1.0);
  std::sort(ns.begin(), ns.end());
  std::sort(ds.begin(), ds.end());
  // ln prod |Gamma(b)|/|Gamma(a)|; skipped for terminating series (a
  // nonpositive-integer numerator has no finite lnGamma, and the log branch
  // is never reached there because the terms are zero past the cut).
  double log_const = 0.0;
  if (cut == UINT64_MAX) {
    for (double b : ds) log_const += std::lgamma(b);
    for (double a : ns) log_const -= std::lgamma(a);
  }

  const std::vector<double> nums = p.nums;
  const std::vector<double> dens = p.dens;
  const sign_pattern tag = all_positive ? sign_pattern::monotone_nonnegative
                                        : sign_pattern::general;
  return series_terms<real>(
      [nums, dens, ns, ds, ez, lnz, log_const, sign, cut](std::uint64_t m) {
        if (m >= cut) return 0.0;
        if (m <= 64) {
          double v = 1.0;
          for (std::uint64_t i = 0; i < m; ++i) {
            const double di = static_cast<double>(i);
            double num = 1.0;
            double den = 1.0;
            for (double a : nums) num *= a + di;
            for (double b : dens) den *= b + di;
            v *= ez * num / (den * (di + 1.0));
          }
          return v;
        }
        const double dm = static_cast<double>(m);
        double lg = dm * lnz + log_const;
        for (std::size_t i = 0; i < ns.size(); ++i)
          lg += detail::lgamma_delta(ds[i] + dm, ns[i] - ds[i]);
        return sign * std::exp(lg);
      },
      tag);
}

}  // namespace cnct

#endif  // CNCT_FUNCTIONS_HYPERGEOMETRIC_HPP
