// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Van Wijngaarden condensation: a monotone series sum_k a(k) is rearranged
// into the strictly alternating series sum_j (-1)^j A_j with
//
//     A_j = sum_{k>=0} 2^k a(2^k (j+1) - 1),
//
// whose terms are sampled at exponentially growing indices of the original
// series.  The rearrangement is exact (it is a reordering of nonnegative
// terms), turns logarithmic convergence into linear alternating convergence,
// and feeds the nonlinear transforms downstream.

#ifndef CNCT_CONDENSE_CONDENSATION_HPP
#define CNCT_CONDENSE_CONDENSATION_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "core/scalar.hpp"
#include "core/series.hpp"

namespace cnct {

struct condensation_config {
  // Inner-sum truncation: stop once the last added term drops below
  // inner_rel_tol times the running sum (the terms of A_j decay at least
  // geometrically for admissible input, so the neglected tail is of the same
  // order).  1e-16 keeps the condensation error below the acceleration error.
  double inner_rel_tol = 1e-16;
  // Absolute floor: a term at or below this magnitude ends the sum no matter
  // what (the default only triggers on exact underflow to zero).
  double inner_abs_floor = 5e-324;
  // Hard cap on inner terms; hitting it with the last term still above
  // tolerance means the input violates the admissibility requirement (terms
  // of the original series must decay faster than 1/k, i.e. the bounding
  // sequence of 2^k a(2^k) must decrease summably).
  std::size_t max_inner_terms = 64;
  // Largest original-series index the sampler may request.
  std::uint64_t max_index = (std::uint64_t{1} << 62);
};

template <class S>
struct condensed_term_info {
  std::uint64_t j = 0;
  S value = S(0);                       // A_j
  std::size_t inner_terms_used = 0;     // how many b_k were accumulated
  std::uint64_t max_original_index = 0; // highest a(.) index touched
};

/// One condensed term A_j.  Generic over the fetch callable so it works with
/// both bare series_terms and the memoizing wrapper.
template <class S, class Fetch>
condensed_term_info<S> condensed_term_from(const Fetch& fetch, std::uint64_t j,
                                           const condensation_config& cfg) {
  condensed_term_info<S> out;
  out.j = j;
  double sum = 0.0;
  std::size_t k = 0;
  for (;;) {
    // Bail out before the sample index 2^k (j+1) - 1 can pass max_index (or
    // overflow 64 bits).  For decaying series the terms underflow long before
    // this triggers; reaching it without convergence is the same inadmissible
    // situation as exhausting max_inner_terms.
    if (k >= 63 || (j + 1) > (cfg.max_index >> k))
      throw inner_sum_error("index bound reached before inner-sum convergence (j=" +
                            std::to_string(j) + ")");
    const std::uint64_t idx = ((j + 1) << k) - 1;
    const double b = std::ldexp(fetch(idx), static_cast<int>(k));  // exact 2^k scaling
    sum += b;
    out.inner_terms_used = k + 1;
    out.max_original_index = idx;
    if (std::fabs(b) < cfg.inner_rel_tol * std::fabs(sum) ||
        std::fabs(b) < cfg.inner_abs_floor) {
      out.value = sum;
      return out;
    }
    ++k;
    if (k >= cfg.max_inner_terms)
      throw inner_sum_error("non-convergent inner sum (j=" + std::to_string(j) +
                            "): term decay too slow for condensation");
  }
}

template <class S>
condensed_term_info<S> condensed_term(const series_terms<S>& terms, std::uint64_t j,
                                      const condensation_config& cfg = {}) {
  static_assert(!is_complex_v<S>, "condensation requires a real monotone series");
  if (!is_monotone(terms.pattern()))
    throw domain_error("condensation requires a series tagged monotone");
  return condensed_term_from<S>([&terms](std::uint64_t k) { return terms(k); }, j, cfg);
}

template <class S>
struct vw_sums_result {
  std::vector<S> sums;                          // S_m = sum_{j<=m} (-1)^j A_j
  std::vector<S> condensed;                     // A_0..A_n (remainder estimates later)
  std::vector<condensed_term_info<S>> info;     // per-term diagnostics
};

/// Partial sums of the condensed alternating series, plus the A_j themselves
/// (the transforms downstream need them as Smith–Ford remainder estimates).
template <class S, class Fetch>
vw_sums_result<S> vw_partial_sums_from(const Fetch& fetch, std::size_t n,
                                       const condensation_config& cfg) {
  vw_sums_result<S> out;
  out.sums.reserve(n + 1);
  out.condensed.reserve(n + 1);
  out.info.reserve(n + 1);
  S acc = S(0);
  for (std::size_t j = 0; j <= n; ++j) {
    auto info = condensed_term_from<S>(fetch, j, cfg);
    acc += (j % 2 == 0) ? info.value : -info.value;
    out.sums.push_back(acc);
    out.condensed.push_back(info.value);
    out.info.push_back(info);
  }
  return out;
}

template <class S>
vw_sums_result<S> vw_partial_sums(const series_terms<S>& terms, std::size_t n,
                                  const condensation_config& cfg = {}) {
  static_assert(!is_complex_v<S>, "condensation requires a real monotone series");
  if (!is_monotone(terms.pattern()))
    throw domain_error("condensation requires a series tagged monotone");
  return vw_partial_sums_from<S>([&terms](std::uint64_t k) { return terms(k); }, n, cfg);
}

/// A_j cache bound to one (series, config) pair.  The driver grows its table
/// one order at a time and must never recompute an inner sum; independent
/// callers may also request distinct j concurrently (distinct-key insertion
/// is mutex-guarded, and recomputing the same pure value on a race is
/// harmless).  Original-series fetches go through the shared memoizing
/// wrapper, so evaluations() reports distinct a(.) indices touched.
template <class S>
class condensed_cache {
 public:
  condensed_cache(memoized_terms<S> terms, condensation_config cfg = {})
      : terms_(std::move(terms)), cfg_(cfg),
        state_(std::make_shared<state>()) {
    static_assert(!is_complex_v<S>, "condensation requires a real monotone series");
    if (!is_monotone(terms_.pattern()))
      throw domain_error("condensation requires a series tagged monotone");
  }

  condensed_term_info<S> term(std::uint64_t j) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->memo.find(j);
      if (it != state_->memo.end()) return it->second;
    }
    auto info = condensed_term_from<S>(
        [this](std::uint64_t k) { return terms_(k); }, j, cfg_);
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->memo.emplace(j, info);
    return info;
  }

  /// Distinct original-series indices fetched so far.
  std::uint64_t evaluations() const { return terms_.evaluations(); }

  const condensation_config& config() const { return cfg_; }

 private:
  struct state {
    mutable std::mutex mu;
    std::map<std::uint64_t, condensed_term_info<S>> memo;
  };
  memoized_terms<S> terms_;
  condensation_config cfg_;
  std::shared_ptr<state> state_;
};

}  // namespace cnct

#endif  // CNCT_CONDENSE_CONDENSATION_HPP
