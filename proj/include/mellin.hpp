#pragma once

#include <functional>
#include <vector>

#include "closed_form.hpp"
#include "ratpoly.hpp"

namespace mellin {

// Closed-form values at s = 0 of M(s)/Gamma(s) for the integrand shapes the
// engine produces, under the single convention value := d/ds|_{s=0}.  When
// M is regular at 0 this equals M(0) because 1/Gamma(s) = s + gamma s^2 + ...

// Gaussian times even polynomial: the time function e^{-t c^2} times the
// spectral integral of e^{-t lambda^2} P(i lambda).  Value -2 pi int_0^c P.
form::ClosedForm mellin_poly_gaussian(const exact::RatPoly& P, const exact::Rational& c);

// Gaussian times the resolvent kernel at a pole offset j: value -2 log(c+j),
// the j = 0 half-circle case included.
form::ClosedForm mellin_pole_term(const exact::Rational& c, const exact::Rational& j);

// Same value when c + j is only known as a 50-digit decimal (square roots).
form::ClosedForm mellin_pole_term_approx(const std::string& argument_digits);

// Gaussian times the symmetrized digamma integral: -2 log Gamma(1+c) + C_psi.
form::ClosedForm mellin_digamma(const exact::Rational& c);

// One admissible term t^exponent or t^exponent * log t of a small-time
// expansion.  exponent = 0 with log set is rejected (double pole at s=0).
struct SmallTTerm {
    double exponent = 0.0;
    bool with_log = false;
};

struct QuadratureConfig {
    double rel_tol = 1e-13;          // adaptive quadrature target
    double fit_low = 1e-6;           // small-t fit window
    double fit_high = 2e-2;          // also the analytic/numeric split point
    int fit_points = 80;             // log-spaced samples across the window
    double fit_residual_tol = 1e-7;  // max relative row residual allowed
    int max_depth = 15;
};

// Numeric d/ds|_0 (M(s)/Gamma(s)) for a sampled f with exponential decay.
// Fits the supplied expansion ladder on [fit_low, fit_high], takes the
// Mellin contribution of the fitted expansion over (0, fit_high] in closed
// form, and integrates f(t)/t from fit_high to infinity by quadrature.
// Throws std::runtime_error when the fit residual exceeds the threshold.
double numeric_mellin_finite_part(const std::function<double(double)>& f,
                                  const std::vector<SmallTTerm>& ladder,
                                  const QuadratureConfig& cfg = {});

// Ready-made ladders.  Top exponent 13/2 throughout; callers shrink the
// window instead when their expansion parameter is large.
std::vector<SmallTTerm> gaussian_ladder(int degree);  // half ints from -(degree+1)/2
std::vector<SmallTTerm> resolvent_ladder();           // {j/2 : j >= 0}, no logs
std::vector<SmallTTerm> digamma_ladder();   // ints plain, half ints with log twins
std::vector<SmallTTerm> heat_ladder();      // {j/2 : j >= -1}, log twins on half ints

}  // namespace mellin
