#pragma once

#include <complex>
#include <random>
#include <vector>

#include "liedata.hpp"
#include "ratpoly.hpp"

namespace oracles {

// Random dominant weight in the given chain.  Entries are bounded by
// max_entry; the integrality class is uniform (all integral, or all
// half-integral when allow_half draws that class).  allow_neg_last flips the
// sign of the last entry for the chains where that stays dominant.
lie::Weight random_weight(lie::Role role, const lie::RankData& rank, int max_entry,
                          std::mt19937& rng, bool allow_half = false,
                          bool allow_neg_last = false);

// Time-side reference integrands with known Mellin values.  Each is the
// spectral heat integral computed by quadrature or exact Gamma moments,
// independent of the closed-form module under test.

// e^{-t c^2} (j/pi) int_R e^{-t x^2}/(x^2+j^2) dx; the j = 0 case collapses
// to the plain Gaussian.  Mellin value -2 log(c+j).
double pole_integrand(double t, double c, int j);

// e^{-t c^2} (1/pi) int_R e^{-t x^2} Re psi(1+ix) dx; Mellin value
// -2 log Gamma(1+c) + C_psi (use differences to cancel C_psi).
double digamma_integrand(double t, double c);

// e^{-t c^2} int_R e^{-t x^2} Q(x) dx with Q(x) = sum_k q[k] x^{2k}, via the
// Gamma-function moments.  With Q = P(i .) the Mellin value is
// -2 pi int_0^c P.
double poly_gaussian_integrand(double t, const std::vector<double>& q_even, double c);

// The assembled cusp-intertwining integrand at unit cusp count whose Mellin
// value is the MJ closed form: alternating levels, truncated pole lists,
// resolvent heat factors.
double mj_integrand(double t, const std::vector<exact::Rational>& base, int m,
                    const lie::RankData& rank);

// Even-d c-function assembled through the Gamma duplication formula instead
// of the direct Gamma(2iz) factor.
std::complex<double> c_even_duplication(const lie::Weight& sigma, const lie::Weight& nu,
                                        std::complex<double> z, const lie::RankData& rank);

// scaled complementary error function e^{x^2} erfc(x), stable for large x
double erfcx(double x);

}  // namespace oracles
