#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "liedata.hpp"

namespace cfunc {

// Logarithmic derivative of the intertwining c-function on the nu-isotypic
// subspace, as a finite list of simple poles: sum of sign * i/(iz - location).
struct PoleTerm {
    int sign = 1;                 // +-1
    exact::Rational location;     // +-(l + rho_j)
};

struct PoleList {
    std::vector<PoleTerm> terms;

    std::complex<double> eval(std::complex<double> z) const;
    // (location -> total integer weight), aggregating repeats
    std::vector<std::pair<exact::Rational, int>> consolidated() const;
};

// Odd d.  [nu:sigma] = 0 yields nullopt (the c-function is the defined zero
// and has no logarithmic derivative).
std::optional<PoleList> c_log_derivative(const lie::Weight& sigma, const lie::Weight& nu,
                                         const lie::RankData& rank);

// Truncated sum over nu of m_nu(sigma_{tau(m),k}) [nu:sigma] c'/c keeping
// only pole locations with l >= m; the discarded sub-m terms cancel.
PoleList f_km(const lie::Weight& sigma, const std::vector<exact::Rational>& base, int m,
              int k, const lie::RankData& rank);

// Untruncated signed merge (used to test the cancellation statement).
PoleList f_km_untruncated(const lie::Weight& sigma, const std::vector<exact::Rational>& base,
                          int m, int k, const lie::RankData& rank);

// Even d: value of the c-function ratio of Gamma factors at z, with the
// overall alpha(n) normalization left out.  Throws near the Gamma poles.
std::complex<double> c_function_even(const lie::Weight& sigma, const lie::Weight& nu,
                                     std::complex<double> z, const lie::RankData& rank,
                                     double pole_eps = 1e-8);

// Even-d logarithmic derivative (c'/c)(z); alpha-free.
std::complex<double> c_log_derivative_even(const lie::Weight& sigma, const lie::Weight& nu,
                                           std::complex<double> z, const lie::RankData& rank);

}  // namespace cfunc
