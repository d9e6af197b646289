#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace semidyn {

using Complex = std::complex<double>;

/// Magnitude bound on either component before a value is treated as overflowed.
inline constexpr double kOverflowGuard = 1e150;

/// The overflow sentinel. Every non-finite value is read as overflow, this is
/// simply the canonical one produced by the evaluators.
inline Complex overflow_value() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf};
}

inline bool is_overflow(Complex z) {
  return !std::isfinite(z.real()) || !std::isfinite(z.imag());
}

/// Collapses anything outside the guard box (or non-finite) to the sentinel.
inline Complex guard(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (!(std::fabs(re) <= kOverflowGuard) || !(std::fabs(im) <= kOverflowGuard)) {
    return overflow_value();
  }
  return z;
}

}  // namespace semidyn
