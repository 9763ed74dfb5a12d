// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Closed forms behind the exactness properties of the transforms: the
// Abel-summed alternating power tails sum_v (-1)^v (n+v+2)^l (polynomials in
// n for l = 1..4), and the Abel sum of the divergent hypergeometric-style
// series l! 1F0(l+1; -1) = sum_j (-1)^j (j+1)_l = l!/2^{l+1}.  These are the
// reference values for the beta = 2 exactness suite.

#ifndef CNCT_FUNCTIONS_APPENDIX_HPP
#define CNCT_FUNCTIONS_APPENDIX_HPP

#include <cmath>
#include <cstdint>

#include "core/scalar.hpp"

namespace cnct {

/// Abel sum of the alternating tail sum_{v>=0} (-1)^v (n+v+2)^l for
/// l = 1..4, as a polynomial in n (valid for any integer n, including the
/// n = -1 reading used in the negative-integer zeta cross-check):
///
///     l=1: (2n+3)/4                 l=2: (n+1)(n+2)/2
///     l=3: (2n+3)(2n^2+6n+3)/8      l=4: (n+1)(n+2)(n^2+3n+1)/2
inline double alternating_power_tail(std::int64_t n, int l) {
  const double dn = static_cast<double>(n);
  switch (l) {
    case 1:
      return (2.0 * dn + 3.0) / 4.0;
    case 2:
      return (dn + 1.0) * (dn + 2.0) / 2.0;
    case 3:
      return (2.0 * dn + 3.0) * (2.0 * dn * dn + 6.0 * dn + 3.0) / 8.0;
    case 4:
      return (dn + 1.0) * (dn + 2.0) * (dn * dn + 3.0 * dn + 1.0) / 2.0;
    default:
      throw domain_error("alternating power tail supports l in {1,2,3,4}");
  }
}

/// Abel sum of l! 1F0(l+1; -1) = sum_j (-1)^j (j+1)_l, equal to l!/2^{l+1}.
/// The factorial is exact in 64-bit integers through l = 20.
inline double one_f_zero_value(std::size_t l) {
  if (l > 20) throw domain_error("one_f_zero_value limited to l <= 20");
  std::int64_t fact = 1;
  for (std::size_t i = 2; i <= l; ++i)
    fact *= static_cast<std::int64_t>(i);
  return std::ldexp(static_cast<double>(fact), -(static_cast<int>(l) + 1));
}

}  // namespace cnct

#endif  // CNCT_FUNCTIONS_APPENDIX_HPP
