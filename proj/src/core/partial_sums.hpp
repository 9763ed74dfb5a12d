// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Partial sums and the ratio-test style convergence diagnostic.

#ifndef CNCT_CORE_PARTIAL_SUMS_HPP
#define CNCT_CORE_PARTIAL_SUMS_HPP

#include <cstddef>
#include <vector>

#include "core/scalar.hpp"
#include "core/series.hpp"

namespace cnct {

/// sigma_m = sum_{k=0}^{m} a(k) for m = 0..n, accumulated strictly left to
/// right (the accumulation order is part of the contract: sigma_m minus
/// sigma_{m-1} must reproduce a(m) up to one rounding of the running sum).
template <class S>
std::vector<S> partial_sums(const series_terms<S>& terms, std::size_t n) {
  std::vector<S> out;
  out.reserve(n + 1);
  S acc = S(0);
  for (std::size_t m = 0; m <= n; ++m) {
    acc += terms(static_cast<std::uint64_t>(m));
    out.push_back(acc);
  }
  return out;
}

template <class S>
struct rho_estimate_result {
  S value = S(0);
  bool indeterminate = false;  // a consecutive difference vanished
};

/// Estimate of the remainder ratio rho from the last three partial sums:
/// (sigma_n - sigma_{n-1}) / (sigma_{n-1} - sigma_{n-2}).  If the remainders
/// behave like rho^n this difference ratio tends to rho as well (rho != 0),
/// so it resembles the classical ratio test: |rho| < 1 linear convergence,
/// rho -> 1 the logarithmic regime the condensation exists for.
template <class S>
rho_estimate_result<S> estimate_rho(const std::vector<S>& sums) {
  if (sums.size() < 3)
    throw domain_error("estimate_rho needs at least 3 partial sums");
  const std::size_t n = sums.size() - 1;
  const S d1 = sums[n] - sums[n - 1];
  const S d0 = sums[n - 1] - sums[n - 2];
  rho_estimate_result<S> r;
  if (modulus(d0) == 0.0 || modulus(d1) == 0.0) {
    r.indeterminate = true;
    return r;
  }
  r.value = d1 / d0;
  return r;
}

}  // namespace cnct

#endif  // CNCT_CORE_PARTIAL_SUMS_HPP
