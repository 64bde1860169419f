#include "special.hpp"

#include <cmath>

namespace special {

namespace {

// B_{2k}/(2k(2k-1)) for the log Gamma tail, k = 1..9
constexpr double kStirling[] = {
    1.0 / 12,        -1.0 / 360,       1.0 / 1260,      -1.0 / 1680,     1.0 / 1188,
    -691.0 / 360360, 1.0 / 156,        -3617.0 / 122400, 43867.0 / 244188,
};

// B_{2k}/(2k) for the digamma tail
constexpr double kPsiTail[] = {
    1.0 / 12,      -1.0 / 120,     1.0 / 252,      -1.0 / 240,      1.0 / 132,
    -691.0 / 32760, 1.0 / 12,      -3617.0 / 8160,
};

constexpr double kShiftTo = 10.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    // reflect to the right half plane to keep the recurrence short
    if (z.real() < 0.5) {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        const double pi = 3.14159265358979323846;
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    std::complex<double> shift = 0.0;
    while (z.real() < kShiftTo) {
        shift -= std::log(z);
        z += 1.0;
    }
    std::complex<double> w = 1.0 / (z * z), series = 0.0;
    for (int k = 8; k >= 0; --k) series = series * w + kStirling[k];
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series / z + shift;
}

std::complex<double> digamma(std::complex<double> z) {
    std::complex<double> shift = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        const double pi = 3.14159265358979323846;
        return digamma(1.0 - z) - pi / std::tan(pi * z);
    }
    while (z.real() < kShiftTo) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    std::complex<double> w = 1.0 / (z * z), series = 0.0;
    for (int k = 7; k >= 0; --k) series = series * w + kPsiTail[k];
    return std::log(z) - 0.5 / z - series * w + shift;
}

}  // namespace special
