#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace chars {

// Formal character arithmetic for the B_r / D_r weight lattices, used by the
// brute-force decomposition oracles and the even-d cusp term.  Exponent
// vectors are stored doubled so that half-integral weights stay exact.

enum class SeriesType { B, D };

using Expt = std::vector<int>;  // doubled exponents, length = rank

struct LaurentPoly {
    int rank = 0;
    std::map<Expt, exact::Int> terms;  // lex-ordered by std::map

    static LaurentPoly zero(int rank) { return LaurentPoly{rank, {}}; }
    static LaurentPoly one(int rank);
    static LaurentPoly monomial(const Expt& doubled, const exact::Int& coeff = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Expt& doubled, const exact::Int& coeff);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const exact::Int& s) const;
    bool operator==(const LaurentPoly& o) const = default;

    // lex-largest doubled exponent (map ordering); poly must be nonzero
    std::pair<Expt, exact::Int> leading() const;
};

Expt double_weight(const std::vector<exact::Rational>& w);
std::vector<exact::Rational> halve_expt(const Expt& e);

// alternating Weyl orbit sum  sum_w det(w) x^{w xi}
LaurentPoly weyl_numerator(SeriesType type, int rank, const std::vector<exact::Rational>& xi);

// irreducible character by the Weyl character formula, exact Laurent division
LaurentPoly character(SeriesType type, int rank, const std::vector<exact::Rational>& lambda);

// decompose a (virtual) character into irreducibles by repeated subtraction
// at the lex-maximal term
std::map<std::vector<exact::Rational>, exact::Int> decompose(SeriesType type, int rank,
                                                             LaurentPoly ch);

// restriction D_{r} -> B_{r-1} along x_1 := 1 (drop the first variable)
LaurentPoly restrict_drop_first(const LaurentPoly& p);

// character of Lambda^p of the standard representation (dim 2r+1 for B_r,
// 2r for D_r)
LaurentPoly exterior_power_std(SeriesType type, int rank, int p);

}  // namespace chars
