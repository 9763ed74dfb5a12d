// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Nonlinear sequence transformations.  Given partial sums s_n and explicit
// remainder estimates omega_n, the generic weighted transform is the ratio
//
//              sum_j (-1)^j C(k,j) w_k(n+j) s_{n+j} / omega_{n+j}
//   T_k^(n) = ---------------------------------------------------- ,
//              sum_j (-1)^j C(k,j) w_k(n+j)         / omega_{n+j}
//
// with the Levin d variant using power weights (beta+n+j)^{k-1} and the
// Weniger delta variant Pochhammer weights (beta+n+j)_{k-1}.  Both are
// evaluated in production through their numerically cheaper three-term
// recursions on numerator and denominator arrays; the direct binomial sums
// are kept for cross-validation at moderate orders (binomials stay exact in
// doubles through order 30).  Remainder estimates follow Smith and Ford:
// omega_n is the first term of the series beyond partial sum s_n.  The
// classical Euler transformation is included as the linear baseline the
// nonlinear transforms are measured against.

#ifndef CNCT_TRANSFORM_TRANSFORMS_HPP
#define CNCT_TRANSFORM_TRANSFORMS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "core/scalar.hpp"

namespace cnct {

enum class transform_family { levin_d, weniger_delta };

/// Recursion coefficient for the Levin d transformation: building order k+1
/// entries from order k uses c = (beta+n)(beta+n+k)^{k-1}/(beta+n+k+1)^k.
/// (The k-th coefficient has the lone factor beta+n, NOT beta+n+k: with the
/// latter the recursion stops agreeing with the direct binomial formula at
/// order 2, so the direct/recursive cross-check pins this form.)
inline double levin_coefficient(double beta, double n, std::size_t k) {
  if (k == 0) return 1.0;
  const double kk = static_cast<double>(k);
  return (beta + n) * std::pow(beta + n + kk, kk - 1.0) /
         std::pow(beta + n + kk + 1.0, kk);
}

/// Recursion coefficient for the Weniger delta transformation:
/// c = (beta+n+k)(beta+n+k-1)/((beta+n+2k)(beta+n+2k-1)).  At k=0 the
/// formula degenerates to 0/0 when beta+n = 1; the value consistent with
/// the direct Pochhammer formula (and the k->0 limit) is exactly 1.
inline double weniger_coefficient(double beta, double n, std::size_t k) {
  if (k == 0) return 1.0;
  const double kk = static_cast<double>(k);
  return ((beta + n + kk) * (beta + n + kk - 1.0)) /
         ((beta + n + 2.0 * kk) * (beta + n + 2.0 * kk - 1.0));
}

inline double family_coefficient(transform_family f, double beta, double n,
                                 std::size_t k) {
  return f == transform_family::levin_d ? levin_coefficient(beta, n, k)
                                        : weniger_coefficient(beta, n, k);
}

/// Stability flag threshold: an entry is flagged when the denominator has
/// lost more than twelve decimal digits to cancellation, i.e. its modulus
/// fell below 1e-12 times the largest-modulus summand that built it.
/// Flagged entries still carry a value but the driver excludes them from
/// convergence decisions.
inline constexpr double stability_threshold = 1e-12;

// ---------------------------------------------------------------------------
// Incremental diagonal recursion (production path)
// ---------------------------------------------------------------------------

/// Grows the transform triangle one partial sum at a time and yields the
/// diagonal T_m^(0) — the highest order reachable from the data seen so far.
/// Numerator and denominator are carried in flat arrays updated in place;
/// alongside them run two magnitude recursions: `top` (largest denominator
/// summand, drives the stability flag) and `mag` (sum of denominator summand
/// magnitudes, so that |D|/mag == 1 detects the all-same-sign denominator an
/// alternating input must produce).
template <class S>
class diagonal_accelerator {
 public:
  diagonal_accelerator(transform_family family, double beta)
      : family_(family), beta_(beta) {}

  struct entry {
    S value = S(0);
    bool flagged = false;    // denominator cancellation beyond threshold
    double denom_ratio = 1;  // |D| / sum of summand magnitudes, in (0, 1]
  };

  /// Push (s_m, omega_m); returns T_m^(0) where m counts pushes from zero.
  /// A zero omega means the series terminated at s_m, which is then the
  /// exact sum: it is returned unchanged here and on every later push.
  entry push(const S& s, const S& omega) {
    if (terminated_) return entry{exact_, false, 1.0};
    if (modulus(omega) == 0.0) {
      terminated_ = true;
      exact_ = s;
      return entry{exact_, false, 1.0};
    }
    num_.push_back(s / omega);
    den_.push_back(S(1) / omega);
    mag_.push_back(1.0 / modulus(omega));
    top_.push_back(1.0 / modulus(omega));
    const std::size_t m = num_.size() - 1;
    for (std::size_t k = 1; k <= m; ++k) {
      const std::size_t n = m - k;
      const double c =
          family_coefficient(family_, beta_, static_cast<double>(n), k - 1);
      num_[n] = num_[n + 1] - c * num_[n];
      den_[n] = den_[n + 1] - c * den_[n];
      mag_[n] = mag_[n + 1] + std::fabs(c) * mag_[n];
      top_[n] = std::max(top_[n + 1], std::fabs(c) * top_[n]);
    }
    entry e;
    e.value = num_[0] / den_[0];
    e.denom_ratio = modulus(den_[0]) / mag_[0];
    e.flagged = modulus(den_[0]) < stability_threshold * top_[0];
    return e;
  }

  std::size_t size() const { return num_.size(); }
  bool terminated() const { return terminated_; }

 private:
  transform_family family_;
  double beta_;
  bool terminated_ = false;
  S exact_ = S(0);
  std::vector<S> num_, den_;
  std::vector<double> mag_, top_;
};

// ---------------------------------------------------------------------------
// Full tables via the three-term recursions
// ---------------------------------------------------------------------------

template <class S>
struct transform_table {
  // value[k] holds T_k^(n) for n = 0..m-k; flagged mirrors the layout.
  std::vector<std::vector<S>> value;
  std::vector<std::vector<bool>> flagged;
  std::vector<S> diagonal;  // T_k^(0), k = 0..max_order

  const S& at(std::size_t k, std::size_t n) const { return value[k][n]; }
  bool flag(std::size_t k, std::size_t n) const { return flagged[k][n]; }
};

/// Full recursion output: the value table plus the numerator and denominator
/// triangles it was built from (same triangular layout as value).
template <class S>
struct recursion_tables {
  transform_table<S> table;
  std::vector<std::vector<S>> num;
  std::vector<std::vector<S>> den;
};

/// Build the whole triangle T_k^(n), k+n <= max_order, via the three-term
/// recursion.  Requires s and omega to supply indices 0..max_order.  If some
/// omega is exactly zero the series terminated there: every entry whose
/// index window reaches the terminated region short-circuits to the partial
/// sum at termination (the exact sum) instead of dividing by zero.
template <class S>
recursion_tables<S> recursive_table(transform_family family, double beta,
                                    const std::vector<S>& s,
                                    const std::vector<S>& omega,
                                    std::size_t max_order) {
  if (s.size() < max_order + 1 || omega.size() < max_order + 1)
    throw domain_error("recursive_table: need max_order+1 sums and estimates");
  const std::size_t m = max_order;
  // First exactly-zero estimate, if any: indices >= cut are terminated.
  std::size_t cut = m + 1;
  for (std::size_t n = 0; n <= m; ++n) {
    if (modulus(omega[n]) == 0.0) {
      cut = n;
      break;
    }
  }
  recursion_tables<S> r;
  r.table.value.assign(m + 1, {});
  r.table.flagged.assign(m + 1, {});
  r.num.assign(m + 1, {});
  r.den.assign(m + 1, {});
  std::vector<S> num(m + 1, S(0)), den(m + 1, S(0));
  std::vector<double> mag(m + 1, 0.0), top(m + 1, 0.0);
  for (std::size_t k = 0; k <= m; ++k) {
    r.table.value[k].resize(m - k + 1);
    r.table.flagged[k].assign(m - k + 1, false);
    r.num[k].resize(m - k + 1, S(0));
    r.den[k].resize(m - k + 1, S(0));
    for (std::size_t n = 0; n + k <= m; ++n) {
      if (n + k >= cut) {
        // Window [n, n+k] touches the terminated region: exact sum.
        r.table.value[k][n] = s[std::max(n, cut)];
        continue;
      }
      if (k == 0) {
        num[n] = s[n] / omega[n];
        den[n] = S(1) / omega[n];
        mag[n] = 1.0 / modulus(omega[n]);
        top[n] = mag[n];
        r.table.value[0][n] = s[n];
      } else {
        const double c =
            family_coefficient(family, beta, static_cast<double>(n), k - 1);
        num[n] = num[n + 1] - c * num[n];
        den[n] = den[n + 1] - c * den[n];
        mag[n] = mag[n + 1] + std::fabs(c) * mag[n];
        top[n] = std::max(top[n + 1], std::fabs(c) * top[n]);
        r.table.value[k][n] = num[n] / den[n];
        r.table.flagged[k][n] = modulus(den[n]) < stability_threshold * top[n];
      }
      r.num[k][n] = num[n];
      r.den[k][n] = den[n];
    }
  }
  r.table.diagonal.resize(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    r.table.diagonal[k] = r.table.value[k][0];
  return r;
}

template <class S>
recursion_tables<S> levin_recursive(double beta, const std::vector<S>& s,
                                    const std::vector<S>& omega,
                                    std::size_t max_order) {
  return recursive_table(transform_family::levin_d, beta, s, omega, max_order);
}

template <class S>
recursion_tables<S> weniger_recursive(double beta, const std::vector<S>& s,
                                      const std::vector<S>& omega,
                                      std::size_t max_order) {
  return recursive_table(transform_family::weniger_delta, beta, s, omega,
                         max_order);
}

// ---------------------------------------------------------------------------
// Direct binomial-sum evaluation (cross-validation path, orders <= 30)
// ---------------------------------------------------------------------------

template <class S>
struct direct_result {
  S value = S(0);
  bool flagged = false;        // unstable denominator
  bool short_circuit = false;  // a zero omega ended the series exactly
};

/// Core of the direct evaluation; w(k, i) is the weight at order k for
/// global index i = n+j.  If any omega in the window is exactly zero the
/// series terminated: the matching partial sum IS the limit and is returned
/// unchanged (short-circuit).
template <class S, class W>
direct_result<S> weighted_direct_core(const W& w, const std::vector<S>& s,
                                      const std::vector<S>& omega,
                                      std::size_t k, std::size_t n) {
  if (s.size() < n + k + 1 || omega.size() < n + k + 1)
    throw domain_error("weighted transform: need indices n..n+k");
  for (std::size_t j = 0; j <= k; ++j) {
    if (modulus(omega[n + j]) == 0.0) {
      direct_result<S> r;
      r.value = s[n + j];
      r.short_circuit = true;
      return r;
    }
  }
  S num = S(0), den = S(0);
  double binom = 1.0;  // C(k, j), updated incrementally (exact through k=30)
  double largest = 0.0;
  for (std::size_t j = 0; j <= k; ++j) {
    const double weight = w(k, n + j);
    if (!(weight > 0.0))
      throw domain_error("weighted transform: weights must be positive");
    const double c = (j % 2 == 0 ? 1.0 : -1.0) * binom * weight;
    num += c * (s[n + j] / omega[n + j]);
    const S dterm = c / omega[n + j];
    den += dterm;
    largest = std::max(largest, modulus(dterm));
    binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  direct_result<S> r;
  r.value = num / den;
  r.flagged = modulus(den) < stability_threshold * largest;
  return r;
}

/// Caller-supplied weight family for the generic transform.
struct weighted_transform_spec {
  std::function<double(std::size_t order, std::size_t index)> weight;
  double beta = 1.0;  // carried for weight families that shift by beta
};

template <class S>
direct_result<S> weighted_transform_direct(const weighted_transform_spec& spec,
                                           const std::vector<S>& s,
                                           const std::vector<S>& omega,
                                           std::size_t k, std::size_t n) {
  return weighted_direct_core(
      [&spec](std::size_t kk, std::size_t i) { return spec.weight(kk, i); },
      s, omega, k, n);
}

/// Levin weights in ratio form ((beta+i)/(beta+n+k))^{k-1}: dividing the raw
/// power weight (beta+i)^{k-1} through by the j-independent normalization
/// (beta+n+k)^{k-1} changes neither ratio but keeps every weight O(1).
inline double levin_weight(double beta, std::size_t k, std::size_t n,
                           std::size_t i) {
  if (k <= 1) return 1.0;
  return std::pow((beta + static_cast<double>(i)) /
                      (beta + static_cast<double>(n + k)),
                  static_cast<double>(k) - 1.0);
}

/// Weniger weights in ratio form (beta+i)_{k-1}/(beta+n+k)_{k-1}.
inline double weniger_weight(double beta, std::size_t k, std::size_t n,
                             std::size_t i) {
  double w = 1.0;
  for (std::size_t m = 0; m + 1 < k; ++m)
    w *= (beta + static_cast<double>(i + m)) /
         (beta + static_cast<double>(n + k + m));
  return w;
}

template <class S>
direct_result<S> levin_direct(double beta, const std::vector<S>& s,
                              const std::vector<S>& omega, std::size_t k,
                              std::size_t n) {
  return weighted_direct_core(
      [beta, n](std::size_t kk, std::size_t i) {
        return levin_weight(beta, kk, n, i);
      },
      s, omega, k, n);
}

template <class S>
direct_result<S> weniger_direct(double beta, const std::vector<S>& s,
                                const std::vector<S>& omega, std::size_t k,
                                std::size_t n) {
  return weighted_direct_core(
      [beta, n](std::size_t kk, std::size_t i) {
        return weniger_weight(beta, kk, n, i);
      },
      s, omega, k, n);
}

// ---------------------------------------------------------------------------
// Smith–Ford remainder estimates
// ---------------------------------------------------------------------------

/// omega_n = (-1)^{n+1} A_{n+1}: the first term of the alternating series
/// sum_j (-1)^j A_j beyond partial sum s_n.  Transforming s_0..s_m therefore
/// needs A_1..A_{m+1}; one estimate is produced per partial sum that has a
/// successor term available.
template <class S>
std::vector<S> smith_ford_estimates(const std::vector<S>& sums,
                                    const std::vector<S>& condensed) {
  const std::size_t count =
      std::min(sums.size(), condensed.empty() ? 0 : condensed.size() - 1);
  std::vector<S> omega;
  omega.reserve(count);
  for (std::size_t n = 0; n < count; ++n)
    omega.push_back((n % 2 == 0) ? -condensed[n + 1] : condensed[n + 1]);
  return omega;
}

/// Same pairing when only the term list is at hand (n-th estimate from the
/// (n+1)-th term); returns one fewer estimate than there are terms.
template <class S>
std::vector<S> smith_ford_estimates(const std::vector<S>& condensed) {
  std::vector<S> omega;
  if (condensed.empty()) return omega;
  omega.reserve(condensed.size() - 1);
  for (std::size_t n = 0; n + 1 < condensed.size(); ++n)
    omega.push_back((n % 2 == 0) ? -condensed[n + 1] : condensed[n + 1]);
  return omega;
}

// ---------------------------------------------------------------------------
// Euler transformation
// ---------------------------------------------------------------------------

/// Partial sums of the Euler transformation of sum_k (-1)^k u_k:
/// E_n = sum_{k<=n} (-1)^k Delta^k u_0 / 2^{k+1}.  The forward differences
/// Delta^k u_0 are maintained in an in-place difference triangle instead of
/// alternating binomial sums, which stays stable well past n = 60.
template <class S>
std::vector<S> euler_transform(const std::vector<S>& u, std::size_t n) {
  if (u.size() < n + 1) throw domain_error("euler_transform: need u_0..u_n");
  std::vector<S> out;
  out.reserve(n + 1);
  std::vector<S> v;
  v.reserve(n + 1);
  S acc = S(0);
  for (std::size_t m = 0; m <= n; ++m) {
    v.push_back(u[m]);
    for (std::size_t i = v.size() - 1; i-- > 0;)
      v[i] = v[i + 1] - v[i];  // after the sweep v[0] = Delta^m u_0
    const S term = ((m % 2 == 0) ? v[0] : -v[0]) /
                   S(std::ldexp(1.0, static_cast<int>(m) + 1));
    acc += term;
    out.push_back(acc);
  }
  return out;
}

}  // namespace cnct

#endif  // CNCT_TRANSFORM_TRANSFORMS_HPP
