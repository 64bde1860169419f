#pragma once

#include <vector>

#include "liedata.hpp"
#include "ratpoly.hpp"

namespace plancherel {

// Product over index pairs of (xi_i - xi_j)(xi_i + xi_j); the Weyl-numerator
// value attached to the M-coordinates xi = (xi_2, ..., xi_{n+1}).
exact::Rational pi_product(const std::vector<exact::Rational>& xi);

// Rational part of the Plancherel polynomial: P_sigma(z) = c_n * p_hat(z)
// with the c_n normalization kept symbolic by the caller.  Even, degree 2n.
exact::RatPoly plancherel_polynomial(const lie::Weight& sigma, const lie::RankData& rank);

// P_j(sigma, lambda) = dim(sigma) prod_{p != j} (-lambda^2 - xi_p^2)/(xi_j^2 - xi_p^2),
// j in 2..n+1.  Even, degree 2n-2.
exact::RatPoly p_j(const lie::Weight& sigma, int j, const lie::RankData& rank);

// value of the even polynomial P at lambda = i*l, i.e. at lambda^2 = -l^2
exact::Rational eval_at_il(const exact::RatPoly& p, const exact::Rational& l);

// Q_{j,l} = 2l (P_j(lambda) - P_j(il)) / (lambda^2 + l^2), exact division
exact::RatPoly q_jl(const lie::Weight& sigma, int j, const exact::Rational& l,
                    const lie::RankData& rank);

// Fourier transform of the invariant cusp distribution, split into the
// digamma block, finitely many rational poles and an even polynomial:
//   Omega(sigma, lambda) = digamma_coefficient * (psi(1+il)+psi(1-il)+2 gamma)
//                        + sum coeff * 2l/(lambda^2+l^2) + poly_part(lambda).
struct OmegaDecomposition {
    exact::Int dim_sigma;
    exact::Int m0;  // |k_{n+1}(sigma)| - 1
    std::vector<std::pair<exact::Int, exact::Rational>> pole_terms;  // (l, coeff)
    exact::RatPoly poly_part;
    exact::Rational digamma_coefficient;  // always -dim_sigma
};

// Integral sigma with k_{n+1}(sigma) != 0; negative last entry goes through
// w0 (Omega is w0-invariant).  Half-integral weights are not covered.
OmegaDecomposition omega_decomposition(const lie::Weight& sigma, const lie::RankData& rank);

// numeric evaluations used by the reconstruction check
double omega_resum(const OmegaDecomposition& om, double lambda);
double omega_direct(const lie::Weight& sigma, double lambda, const lie::RankData& rank);

}  // namespace plancherel
