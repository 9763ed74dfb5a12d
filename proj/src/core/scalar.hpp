// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// Scalar abstraction: the whole pipeline is generic over a working scalar that
// is either a real double or a complex<double>.  Everything is plain IEEE-754
// binary64 arithmetic; there is deliberately no extended precision anywhere on
// the computation path.

#ifndef CNCT_CORE_SCALAR_HPP
#define CNCT_CORE_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cnct {

using real = double;
using cplx = std::complex<double>;

template <class T>
inline constexpr bool is_complex_v = false;
template <class T>
inline constexpr bool is_complex_v<std::complex<T>> = true;

/// Modulus of a scalar: |x| for reals, the complex magnitude otherwise.
inline double modulus(double x) { return std::fabs(x); }
inline double modulus(const cplx& x) { return std::abs(x); }

/// One unit of relative rounding at magnitude |x|: |x| * 2^-52.  Used for
/// "within N ulp" style tolerances on O(1) targets.
inline double ulp_of(double x) {
  return std::fabs(x) * std::numeric_limits<double>::epsilon();
}

/// Error taxonomy.  All library failures derive from cnct::error so the C API
/// can map them onto stable status codes.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on user input was violated (bad parameter domain).
struct domain_error : error {
  explicit domain_error(const std::string& what) : error(what) {}
};

/// A declared series contract (sign pattern, purity) failed validation.
struct contract_error : error {
  explicit contract_error(const std::string& what) : error(what) {}
};

/// The condensation inner sum could not be truncated below tolerance.
struct inner_sum_error : error {
  explicit inner_sum_error(const std::string& what) : error(what) {}
};

/// A closed form was evaluated at a pole of its prefactor.
struct pole_error : error {
  explicit pole_error(const std::string& what) : error(what) {}
};

/// A scaled intermediate left its guaranteed range (internal consistency).
struct overflow_guard_error : error {
  explicit overflow_guard_error(const std::string& what) : error(what) {}
};

}  // namespace cnct

#endif  // CNCT_CORE_SCALAR_HPP
