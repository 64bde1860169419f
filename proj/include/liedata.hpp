#pragma once

#include <string>
#include <vector>

#include "rational.hpp"
#include "ratpoly.hpp"

namespace lie {

// G = Spin(d,1) with d = 2n+1 (odd) or d = 2n+2 (even), K = Spin(d),
// M = Spin(d-1).  Weights live in the e_j coordinates of a compact Cartan;
// the inner product is the standard Euclidean one in these coordinates.
// That single normalization fixes every dimension and Casimir formula below.

enum class Parity { odd, even };
enum class Role { G, K, M };

std::string to_string(Parity p);
std::string to_string(Role r);
Parity parity_from_string(const std::string& s);
Role role_from_string(const std::string& s);

struct RankData {
    int n = 1;
    Parity parity = Parity::odd;
};

// rho_1..rho_{n+1}: n+1-j for odd d, n+3/2-j for even d
std::vector<exact::Rational> rho_values(int n, Parity parity);

struct Weight {
    Role role = Role::M;
    std::vector<exact::Rational> entries;

    bool operator==(const Weight& o) const = default;
    bool operator<(const Weight& o) const;
};

std::string to_string(const Weight& w);

// Number of entries a weight of the given role carries.  G-weights always
// have n+1; K has n (odd) or n+1 (even); M has n for both parities, indexed
// k_2..k_{n+1} throughout.
int entry_count(Role role, const RankData& rank);

// Dominance plus the uniform integrality class (all entries in Z, or all in
// Z+1/2).  Wrong entry count throws; dominance failure just returns false.
bool validate_weight(const Weight& w, const RankData& rank);
void require_valid(const Weight& w, const RankData& rank);

bool integral_entries(const Weight& w);

Weight w0_action(const Weight& sigma, const RankData& rank);
Weight theta_twist(const Weight& tau, const RankData& rank);

// (tau_1+m, ..., tau_{n+1}+m) as a G-weight
Weight tau_m(const std::vector<exact::Rational>& base, const exact::Rational& m,
             const RankData& rank);

exact::Int dim_M(const Weight& sigma, const RankData& rank);
exact::Int dim_K(const Weight& nu, const RankData& rank);
exact::Int dim_G(const Weight& tau, const RankData& rank);
exact::Int dim_weight(const Weight& w, const RankData& rank);

// exact polynomial P with P(m) = dim_G(tau(m)); degree n(n+1)/2
exact::RatPoly dim_tau_m_polynomial(const std::vector<exact::Rational>& base,
                                    const RankData& rank);

// c(sigma) = sum_{j>=2} (k_j+rho_j)^2 - |rho|^2
exact::Rational casimir_M(const Weight& sigma, const RankData& rank);
// tau(Omega) = sum_j (k_j+rho_j)^2 - |rho|^2
exact::Rational casimir_G(const Weight& tau, const RankData& rank);
// principal series infinitesimal character: -lambda^2 + c(sigma)
exact::Rational casimir_principal(const Weight& sigma, const exact::Rational& lambda,
                                  const RankData& rank);

}  // namespace lie
