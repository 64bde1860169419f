#pragma once

#include <vector>

#include "liedata.hpp"

namespace kostant {

// One stratum of the nilpotent-cohomology decomposition of a G-representation
// into MA-data: level k, the M-weight sigma_{tau,k} and the exponent
// lambda_{tau,k} = tau_{k+1} + n - k.
struct KostantDatum {
    int k = 0;
    lie::Weight sigma;
    exact::Rational lambda;
};

// Levels k = 0..n.  Odd parity only; tau dominant.
std::vector<KostantDatum> kostant_data(const lie::Weight& tau, const lie::RankData& rank);

// The full 2(n+1)-element list: (lambda_k, sigma_k, k) together with the
// mirror entries (-lambda_k, w0 sigma_k, 2n-k).
struct DecompositionEntry {
    exact::Rational lambda;
    lie::Weight sigma;
    int level = 0;
};
std::vector<DecompositionEntry> full_decomposition(const lie::Weight& tau,
                                                   const lie::RankData& rank);

// tau(Omega) = lambda_k^2 + c(sigma_k) for every k
bool casimir_identity_check(const lie::Weight& tau, const lie::RankData& rank);

// sum_k (-1)^k dim sigma_{tau,k}; identically zero
exact::Int alternating_dim_sum(const lie::Weight& tau, const lie::RankData& rank);

}  // namespace kostant
