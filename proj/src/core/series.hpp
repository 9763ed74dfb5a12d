// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// The term-generator contract.  A series is a pure random-access mapping
// index k -> a(k) together with a caller-declared sign pattern.  Purity
// matters: the condensation stage samples terms at exponentially growing,
// widely scattered indices and may revisit them, and results must not depend
// on evaluation order.

#ifndef CNCT_CORE_SERIES_HPP
#define CNCT_CORE_SERIES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "core/scalar.hpp"

namespace cnct {

enum class sign_pattern {
  monotone_nonnegative,  // every a(k) >= 0 (zero allowed)
  monotone_nonpositive,  // every a(k) <= 0
  alternating,
  general,
};

inline bool is_monotone(sign_pattern p) {
  return p == sign_pattern::monotone_nonnegative ||
         p == sign_pattern::monotone_nonpositive;
}

/// A pure term generator with a declared sign pattern.
///
/// The tag is caller-declared, not inferred (inference over an infinite
/// series is impossible).  As a cheap spot check, terms with index < 64 are
/// validated against a declared monotone tag whenever they are generated; a
/// violation raises contract_error.  Generators must tolerate indices near
/// 2^63: return a finite value or underflow to zero, never trap.
template <class S>
class series_terms {
 public:
  using scalar_type = S;

  series_terms(std::function<S(std::uint64_t)> fn, sign_pattern tag)
      : fn_(std::move(fn)), tag_(tag) {}

  S operator()(std::uint64_t k) const {
    S v = fn_(k);
    if (k < 64) validate(k, v);
    return v;
  }

  sign_pattern pattern() const { return tag_; }

 private:
  void validate(std::uint64_t k, const S& v) const {
    if constexpr (!is_complex_v<S>) {
      if (tag_ == sign_pattern::monotone_nonnegative && v < 0.0)
        throw contract_error("series tagged monotone-nonnegative produced a negative term at index " +
                             std::to_string(k));
      if (tag_ == sign_pattern::monotone_nonpositive && v > 0.0)
        throw contract_error("series tagged monotone-nonpositive produced a positive term at index " +
                             std::to_string(k));
    } else {
      if (is_monotone(tag_))
        throw contract_error("complex series cannot carry a monotone sign tag");
    }
  }

  std::function<S(std::uint64_t)> fn_;
  sign_pattern tag_;
};

/// Drop the first n terms: shift(a, n)(k) == a(k + n).  Lets callers sum a
/// finite irregular-sign head directly and hand the monotone tail to the
/// pipeline.
template <class S>
series_terms<S> shift(series_terms<S> terms, std::uint64_t n) {
  auto tag = terms.pattern();
  return series_terms<S>(
      [t = std::move(terms), n](std::uint64_t k) { return t(k + n); }, tag);
}

/// Memoizing wrapper used for evaluation accounting: evaluations() is the
/// number of DISTINCT indices fetched so far.  Insertion of distinct keys is
/// mutex-guarded so concurrent condensation of different A_j stays safe.
template <class S>
class memoized_terms {
 public:
  explicit memoized_terms(series_terms<S> terms)
      : terms_(std::move(terms)), state_(std::make_shared<state>()) {}

  S operator()(std::uint64_t k) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->memo.find(k);
      if (it != state_->memo.end()) return it->second;
    }
    S v = terms_(k);
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->memo.emplace(k, v);
    return v;
  }

  sign_pattern pattern() const { return terms_.pattern(); }

  std::uint64_t evaluations() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->memo.size();
  }

  /// View as a plain series (shares the cache).
  series_terms<S> as_series() const {
    auto self = *this;
    return series_terms<S>([self](std::uint64_t k) { return self(k); },
                           terms_.pattern());
  }

 private:
  struct state {
    mutable std::mutex mu;
    std::map<std::uint64_t, S> memo;
  };
  series_terms<S> terms_;
  std::shared_ptr<state> state_;
};

}  // namespace cnct

#endif  // CNCT_CORE_SERIES_HPP
