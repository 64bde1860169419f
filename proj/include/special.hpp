#pragma once

#include <complex>

namespace special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Principal-branch log Gamma for Re z pushed right by recurrence, then the
// Stirling series.  Accurate to ~1e-14 away from the poles; the callers stay
// off the nonpositive integers.
std::complex<double> log_gamma(std::complex<double> z);

// digamma via the same shift-then-asymptotic scheme
std::complex<double> digamma(std::complex<double> z);

}  // namespace special
