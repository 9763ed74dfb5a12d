// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Riemann zeta machinery: Dirichlet term generators (real and complex), the
// closed form of the condensed terms, the alternating-series entry point that
// extends evaluation to complex arguments and to divergent cases summed by
// the nonlinear transforms, truncation-error estimates for the raw series,
// Bernoulli numbers, negative-integer values, and an Euler-Maclaurin
// reference evaluator used as an independent oracle in the tests.

#ifndef CNCT_FUNCTIONS_ZETA_HPP
#define CNCT_FUNCTIONS_ZETA_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "core/scalar.hpp"
#include "core/series.hpp"

namespace cnct {

// ---------------------------------------------------------------------------
// Dirichlet series terms a(m) = (m+1)^{-z}
// ---------------------------------------------------------------------------

/// Terms of zeta(z) = sum_m (m+1)^{-z}.  For real z > 1 the series is
/// monotone and condensable; otherwise the terms are still generated but
/// tagged general, so the condensation path refuses them.
inline series_terms<real> zeta_dirichlet_terms(double z) {
  const sign_pattern tag =
      z > 1.0 ? sign_pattern::monotone_nonnegative : sign_pattern::general;
  return series_terms<real>(
      [z](std::uint64_t m) {
        return std::pow(static_cast<double>(m) + 1.0, -z);
      },
      tag);
}

/// Complex argument: a(m) = exp(-z ln(m+1)), principal branch.
inline series_terms<cplx> zeta_dirichlet_terms(cplx z) {
  return series_terms<cplx>(
      [z](std::uint64_t m) {
        return std::exp(-z * std::log(static_cast<double>(m) + 1.0));
      },
      sign_pattern::general);
}

// ---------------------------------------------------------------------------
// Truncation estimate for the raw Dirichlet series
// ---------------------------------------------------------------------------

/// Asymptotic estimate of the remainder sum_{k>n} (k+1)^{-z} after the
/// partial sum through a(n):
///
///     (n+1)^{1-z}/(z-1) - 1/(2 (n+1)^z),
///
/// two terms of the Euler-Maclaurin tail; the next correction is
/// O(n^{-z-1}).  At z close to 1 this quantifies why the raw series is
/// hopeless: at z = 1.01 the remainder after ten terms still exceeds 97.
inline double zeta_truncation_estimate(double z, std::uint64_t n) {
  if (!(z > 1.0))
    throw domain_error("truncation estimate requires z > 1");
  const double x = static_cast<double>(n) + 1.0;
  return std::pow(x, 1.0 - z) / (z - 1.0) - 0.5 * std::pow(x, -z);
}

// ---------------------------------------------------------------------------
// Condensed terms in closed form
// ---------------------------------------------------------------------------

/// The condensation of the Dirichlet series has a geometric inner sum:
///
///     A_j = sum_k 2^k (2^k (j+1))^{-z} = (j+1)^{-z} / (1 - 2^{1-z}),
///
/// valid as an analytic continuation even when |2^{1-z}| >= 1 (the divergent
/// inner sum is assigned its geometric closed form), which is what lets the
/// alternating route evaluate zeta on and left of the critical strip.
inline real zeta_condensed_closed(double z, std::uint64_t j) {
  const double pre = 1.0 - std::pow(2.0, 1.0 - z);
  if (pre == 0.0) throw pole_error("zeta prefactor pole at z = 1");
  return 1.0 / pre * std::pow(static_cast<double>(j) + 1.0, -z);
}

inline cplx zeta_condensed_closed(cplx z, std::uint64_t j) {
  const cplx pre = 1.0 - std::exp((1.0 - z) * std::log(2.0));
  if (modulus(pre) == 0.0) throw pole_error("zeta prefactor pole at z = 1");
  return 1.0 / pre *
         std::exp(-z * std::log(static_cast<double>(j) + 1.0));
}

namespace detail {
template <class S, class Z>
std::vector<S> zeta_alt_sums_impl(Z z, std::size_t n) {
  std::vector<S> sums;
  sums.reserve(n + 1);
  S acc = S(0);
  for (std::size_t j = 0; j <= n; ++j) {
    const S a = zeta_condensed_closed(z, j);
    acc += (j % 2 == 0) ? a : -a;
    sums.push_back(acc);
  }
  return sums;
}
}  // namespace detail

/// Partial sums S_0..S_n of the alternating series
/// (1/(1-2^{1-z})) sum_j (-1)^j (j+1)^{-z}.  Converges for Re z > 0 and is
/// summable by the transforms far beyond that (divergent cases included).
inline std::vector<real> zeta_alt_partial_sums(double z, std::size_t n) {
  return detail::zeta_alt_sums_impl<real>(z, n);
}

inline std::vector<cplx> zeta_alt_partial_sums(cplx z, std::size_t n) {
  return detail::zeta_alt_sums_impl<cplx>(z, n);
}

// ---------------------------------------------------------------------------
// Bernoulli numbers
// ---------------------------------------------------------------------------

/// B_0..B_{2q} by the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0.
/// Binomials are built incrementally in 64-bit integers, which stays exact
/// through m+1 = 61 (the peak intermediate C(61,30)*31 ~ 7.2e18 < 2^63), so
/// q <= 30 keeps every coefficient exact and the recurrence loses accuracy
/// only through the final divisions.
inline std::vector<double> bernoulli_numbers(std::size_t q) {
  if (q > 30) throw domain_error("bernoulli table limited to q <= 30");
  const std::size_t n_max = 2 * q;
  std::vector<double> b(n_max + 1, 0.0);
  b[0] = 1.0;
  for (std::size_t m = 1; m <= n_max; ++m) {
    std::int64_t binom = 1;  // C(m+1, 0)
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += static_cast<double>(binom) * b[j];
      binom = binom * static_cast<std::int64_t>(m + 1 - j) /
              static_cast<std::int64_t>(j + 1);
    }
    b[m] = -acc / (static_cast<double>(m) + 1.0);
  }
  return b;
}

/// zeta(0) = -1/2, zeta(-l) = -B_{l+1}/(l+1) for l >= 1 (zero at negative
/// even integers since the odd Bernoulli numbers beyond B_1 vanish).
inline double zeta_neg_int(std::size_t l) {
  if (l == 0) return -0.5;
  if (l > 59) throw domain_error("zeta_neg_int limited to l <= 59");
  const std::vector<double> b = bernoulli_numbers((l + 2) / 2);
  return -b[l + 1] / (static_cast<double>(l) + 1.0);
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin reference evaluation
// ---------------------------------------------------------------------------

/// zeta(z) for real z > 1 from the Euler-Maclaurin formula with head length
/// N and q correction terms,
///
///     sum_{m<N} (m+1)^{-z} + x^{1-z}/(z-1) + x^{-z}/2
///       + sum_{j=1..q} B_{2j}/(2j)! (z)_{2j-1} x^{-z-2j+1},   x = N+1,
///
/// where (z)_{2j-1} is the rising factorial from the derivatives of x^{-z}.
/// With N = 100, q = 8 this is accurate to full double precision down to
/// z = 1.01 and serves as the independent cross-check for the accelerated
/// values.
inline double euler_maclaurin_zeta(double z, std::size_t big_n,
                                   std::size_t q) {
  if (!(z > 1.0)) throw domain_error("euler_maclaurin_zeta requires z > 1");
  if (big_n < 10) throw domain_error("euler_maclaurin_zeta requires N >= 10");
  if (q < 1 || q > 10)
    throw domain_error("euler_maclaurin_zeta requires 1 <= q <= 10");
  const std::vector<double> b = bernoulli_numbers(q);
  double s = 0.0;
  for (std::size_t m = 0; m < big_n; ++m)
    s += std::pow(static_cast<double>(m) + 1.0, -z);
  const double x = static_cast<double>(big_n + 1);
  s += std::pow(x, 1.0 - z) / (z - 1.0) + 0.5 * std::pow(x, -z);
  for (std::size_t j = 1; j <= q; ++j) {
    double f = 1.0;
    for (std::size_t i = 0; i < 2 * j - 1; ++i)
      f *= z + static_cast<double>(i);
    std::int64_t fact = 1;  // (2j)! <= 20! fits in 64 bits exactly
    for (std::size_t i = 2; i <= 2 * j; ++i)
      fact *= static_cast<std::int64_t>(i);
    s += b[2 * j] / static_cast<double>(fact) * f *
         std::pow(x, (-z - 2.0 * static_cast<double>(j)) + 1.0);
  }
  return s;
}

}  // namespace cnct

#endif  // CNCT_FUNCTIONS_ZETA_HPP
