// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// The pipeline driver: grow the alternating series one term at a time
// (condensing on the fly when the input is a monotone series), push each new
// partial sum with its Smith-Ford remainder estimate into the requested
// transform diagonals, and stop on the two-consecutive-increments rule or at
// max_order.  Rows are recorded for table output; evaluation accounting
// counts distinct original-series fetches through the memoizing cache.

#ifndef CNCT_DRIVER_ACCELERATE_HPP
#define CNCT_DRIVER_ACCELERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "condense/condensation.hpp"
#include "core/partial_sums.hpp"
#include "core/scalar.hpp"
#include "core/series.hpp"
#include "transform/transforms.hpp"

namespace cnct {

enum class transform_kind { levin_d, weniger_delta, euler, both };

enum class acceleration_mode {
  condense_then_accelerate,     // monotone input, Van Wijngaarden first
  accelerate_given_alternating  // input terms are already (-1)^j A_j
};

/// Shared acceleration knobs.  min_rows keeps the driver filling rows after
/// convergence (tables print a fixed number of orders); include_euler adds
/// the Euler column next to the nonlinear transforms.
struct acceleration_options {
  transform_kind transform = transform_kind::both;
  double beta = 1.0;
  double target_rel_tol = 1e-14;
  std::size_t max_order = 30;
  std::size_t min_rows = 0;
  bool include_euler = false;
};

struct acceleration_request {
  series_terms<real> terms;
  acceleration_options options;
  condensation_config condensation;
  acceleration_mode mode = acceleration_mode::condense_then_accelerate;
};

template <class S>
struct output_row {
  std::size_t n = 0;
  S partial_sum = S(0);
  std::optional<S> euler;
  std::optional<S> levin_d;
  std::optional<S> weniger_delta;
};

template <class S>
struct acceleration_result {
  S value = S(0);
  std::size_t order_used = 0;
  double error_estimate = 0.0;  // modulus of the last diagonal increment
  std::uint64_t term_evaluations = 0;
  bool converged = false;
  std::vector<std::string> stability_warnings;
  std::vector<output_row<S>> rows;
};

namespace detail {

/// Data feed for the engine: partial sums, remainder estimates, and the
/// alternating terms (Euler input), all by index.  `limit` is the largest
/// row index the feed can serve.
template <class S>
struct engine_feed {
  std::function<S(std::size_t)> sum_at;
  std::function<S(std::size_t)> omega_at;
  std::function<S(std::size_t)> term_at;
  std::size_t limit = 0;
};

template <class S>
acceleration_result<S> run_engine(const engine_feed<S>& feed,
                                  const acceleration_options& opt) {
  if (opt.max_order < 2) throw domain_error("max_order must be at least 2");
  if (!(opt.target_rel_tol > 0.0))
    throw domain_error("target_rel_tol must be positive");
  if (!(opt.beta > 0.0)) throw domain_error("beta must be positive");

  const bool use_levin = opt.transform == transform_kind::levin_d ||
                         opt.transform == transform_kind::both;
  const bool use_weniger = opt.transform == transform_kind::weniger_delta ||
                           opt.transform == transform_kind::both;
  const bool use_euler =
      opt.transform == transform_kind::euler || opt.include_euler;

  diagonal_accelerator<S> levin(transform_family::levin_d, opt.beta);
  diagonal_accelerator<S> weniger(transform_family::weniger_delta, opt.beta);
  std::vector<S> diff;  // Euler forward-difference triangle
  S euler_acc = S(0);

  acceleration_result<S> res;
  const std::size_t last = std::min(opt.max_order, feed.limit);
  const std::size_t rows_wanted = std::min(opt.min_rows, last + 1);

  S prev_primary = S(0);
  int consecutive_ok = 0;
  bool terminated = false;

  for (std::size_t m = 0; m <= last; ++m) {
    const S s = feed.sum_at(m);
    const S om = feed.omega_at(m);
    output_row<S> row;
    row.n = m;
    row.partial_sum = s;

    typename diagonal_accelerator<S>::entry levin_entry{};
    typename diagonal_accelerator<S>::entry weniger_entry{};
    if (use_levin) {
      levin_entry = levin.push(s, om);
      row.levin_d = levin_entry.value;
      if (levin_entry.flagged)
        res.stability_warnings.push_back(
            "levin-d denominator cancellation at order " + std::to_string(m));
    }
    if (use_weniger) {
      weniger_entry = weniger.push(s, om);
      row.weniger_delta = weniger_entry.value;
      if (weniger_entry.flagged)
        res.stability_warnings.push_back(
            "weniger-delta denominator cancellation at order " +
            std::to_string(m));
    }
    if (use_euler) {
      diff.push_back(feed.term_at(m));
      for (std::size_t i = diff.size() - 1; i-- > 0;)
        diff[i] = diff[i + 1] - diff[i];
      euler_acc += ((m % 2 == 0) ? diff[0] : -diff[0]) /
                   S(std::ldexp(1.0, static_cast<int>(m) + 1));
      row.euler = euler_acc;
    }

    S primary;
    bool flagged = false;
    switch (opt.transform) {
      case transform_kind::levin_d:
        primary = levin_entry.value;
        flagged = levin_entry.flagged;
        terminated = levin.terminated();
        break;
      case transform_kind::euler:
        primary = euler_acc;
        break;
      case transform_kind::weniger_delta:
      case transform_kind::both:
      default:
        primary = weniger_entry.value;
        flagged = weniger_entry.flagged;
        terminated = weniger.terminated();
        break;
    }

    if (terminated) {
      // A zero remainder estimate means the series ended: the value is the
      // exact sum from here on.
      res.converged = true;
      res.error_estimate = 0.0;
    } else if (m > 0) {
      const double inc = modulus(primary - prev_primary);
      const bool ok = !flagged && inc <= opt.target_rel_tol * modulus(primary);
      consecutive_ok = ok ? consecutive_ok + 1 : 0;
      if (consecutive_ok >= 2) res.converged = true;
      res.error_estimate = inc;
    }
    prev_primary = primary;
    res.value = primary;
    res.order_used = m;
    res.rows.push_back(std::move(row));
    if (res.converged && res.rows.size() >= rows_wanted) break;
  }
  return res;
}

/// Incrementally condensed series: A_j and its alternating partial sums,
/// grown on demand, backed by the concurrent per-(series, config) cache.
struct condensed_feed_state {
  condensed_feed_state(memoized_terms<real> memo, condensation_config cfg)
      : cache(std::move(memo), cfg) {}
  condensed_cache<real> cache;
  std::vector<real> a;
  std::vector<real> sums;
  void grow(std::size_t j) {
    while (a.size() <= j) {
      const real v = cache.term(a.size()).value;
      const real prev = sums.empty() ? 0.0 : sums.back();
      sums.push_back(prev + ((a.size() % 2 == 0) ? v : -v));
      a.push_back(v);
    }
  }
};

/// Alternating input consumed directly: terms are the signed t_j = (-1)^j A_j,
/// so the Smith-Ford estimate is simply the first neglected term t_{n+1}.
struct alternating_feed_state {
  explicit alternating_feed_state(series_terms<real> t) : terms(std::move(t)) {}
  series_terms<real> terms;
  std::vector<real> t;
  std::vector<real> sums;
  void grow(std::size_t j) {
    while (t.size() <= j) {
      const real v = terms(t.size());
      const real prev = sums.empty() ? 0.0 : sums.back();
      sums.push_back(prev + v);
      t.push_back(v);
    }
  }
};

}  // namespace detail

/// Acceleration stage alone, on prebuilt partial sums and condensed terms
/// (handles complex input, divergent input, and file-supplied series).  The
/// usable order is capped by the data: order m needs S_m and A_{m+1}.
template <class S>
acceleration_result<S> accelerate_alternating(
    const std::vector<S>& sums, const std::vector<S>& condensed,
    const acceleration_options& opt) {
  if (sums.size() < 3 || condensed.size() < 4)
    throw domain_error("acceleration needs at least 3 partial sums and 4 terms");
  detail::engine_feed<S> feed;
  feed.sum_at = [&sums](std::size_t m) { return sums[m]; };
  feed.omega_at = [&condensed](std::size_t m) {
    return (m % 2 == 0) ? -condensed[m + 1] : condensed[m + 1];
  };
  feed.term_at = [&condensed](std::size_t m) { return condensed[m]; };
  feed.limit = std::min(sums.size() - 1, condensed.size() - 2);
  acceleration_result<S> res = detail::run_engine(feed, opt);
  res.term_evaluations = static_cast<std::uint64_t>(res.order_used) + 2;
  return res;
}

/// The combined nonlinear-condensation transformation: condense the monotone
/// input into an alternating series (or take it as already alternating in
/// the pass-through mode), then accelerate.  Condensation errors propagate;
/// running out of orders is not an error — the result says converged=false.
inline acceleration_result<real> cnct(const acceleration_request& req) {
  if (req.mode == acceleration_mode::condense_then_accelerate) {
    auto state = std::make_shared<detail::condensed_feed_state>(
        memoized_terms<real>(req.terms), req.condensation);
    detail::engine_feed<real> feed;
    feed.sum_at = [state](std::size_t m) {
      state->grow(m);
      return state->sums[m];
    };
    feed.omega_at = [state](std::size_t m) {
      state->grow(m + 1);
      return (m % 2 == 0) ? -state->a[m + 1] : state->a[m + 1];
    };
    feed.term_at = [state](std::size_t m) {
      state->grow(m);
      return state->a[m];
    };
    feed.limit = SIZE_MAX - 1;
    acceleration_result<real> res = detail::run_engine(feed, req.options);
    res.term_evaluations = state->cache.evaluations();
    return res;
  }
  auto state = std::make_shared<detail::alternating_feed_state>(req.terms);
  detail::engine_feed<real> feed;
  feed.sum_at = [state](std::size_t m) {
    state->grow(m);
    return state->sums[m];
  };
  feed.omega_at = [state](std::size_t m) {
    state->grow(m + 1);
    return state->t[m + 1];
  };
  feed.term_at = [state](std::size_t m) {
    state->grow(m);
    return (m % 2 == 0) ? state->t[m] : -state->t[m];
  };
  feed.limit = SIZE_MAX - 1;
  acceleration_result<real> res = detail::run_engine(feed, req.options);
  res.term_evaluations = static_cast<std::uint64_t>(res.order_used) + 2;
  return res;
}

}  // namespace cnct

#endif  // CNCT_DRIVER_ACCELERATE_HPP
