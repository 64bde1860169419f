#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liedata.hpp"

namespace branching {

// K down to M restriction data and the signed inverse map nu(sigma).
// Restriction K|M is multiplicity free; membership is the classical
// interlacing condition between the weight entries.

std::vector<lie::Weight> branch_K_to_M(const lie::Weight& nu, const lie::RankData& rank);
int mult_K_M(const lie::Weight& nu, const lie::Weight& sigma, const lie::RankData& rank);

// Signed K-type combination inverting restriction: entry (-1)^{|mu|} at
// Lambda(sigma) - mu over mu in {0,1}^n, keeping only dominant results.
struct BranchingTable {
    lie::Weight sigma;
    std::vector<std::pair<lie::Weight, int>> entries;  // (nu, m_nu) with m_nu = +-1

    int multiplicity(const lie::Weight& nu) const;
};

BranchingTable nu_of_sigma(const lie::Weight& sigma, const lie::RankData& rank);

// Expands nu_of_sigma through branch_K_to_M and checks the result equals
// sigma (self-dual case) or sigma + w0 sigma.
bool verify_iota(const lie::Weight& sigma, const lie::RankData& rank);

// Both sides of the alternating-degree identity
//   sum_p (-1)^p p [Lambda^p p* x tau|K : nu] = sum_k (-1)^{k+1} m_nu(sigma_{tau,k}).
// The left side runs through the character oracle (n <= 2); the right side
// is closed form.  Requires tau_{n+1} >= 1: the identity genuinely fails
// when some sigma_{tau,k} is w0-fixed and its derivation assumes otherwise.
std::pair<exact::Int, exact::Int> alternating_p_identity(const lie::Weight& tau,
                                                         const lie::Weight& nu,
                                                         const lie::RankData& rank);

// min over dominant sigma in the box |k_j(sigma)| <= tau_{j-1}+1 of
// tau(Omega) - c(sigma)
exact::Rational max_casimir_gap(const lie::Weight& tau, const lie::RankData& rank);

}  // namespace branching
