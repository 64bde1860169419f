#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rational.hpp"

namespace form {

// Exact linear combinations of multiplicative monomials in the constants the
// engine never evaluates eagerly: powers of pi, the Euler-Mascheroni gamma,
// the universal digamma constant C_psi, the Plancherel normalization c_n,
// vol(X), the cusp number kappa(X), the lattice constant C_Gamma, and at most
// one log or log Gamma factor per monomial.  Log arguments are exact positive
// rationals; square-root arguments that are not perfect squares are carried
// as 50-digit decimal strings and tagged, so exact-mode comparisons can skip
// them.

struct Atom {
    enum class LogKind { none, log, log_gamma };

    int pi_power = 0;
    bool euler_gamma = false;
    bool cpsi = false;
    bool cn = false;
    bool vol = false;
    bool kappa = false;
    bool cgamma = false;
    LogKind log_kind = LogKind::none;
    bool log_exact = true;
    exact::Rational log_argument{0};  // used when log_exact
    std::string log_approx;          // decimal string, used otherwise

    bool operator==(const Atom& o) const;
    bool operator<(const Atom& o) const;

    // Stable display key, e.g. "pi^-2*cn*vol" or "kappa*log(7/2)".
    std::string key() const;
};

Atom unit_atom();
Atom pi_atom(int power);
Atom euler_gamma_atom();
Atom cpsi_atom();
Atom cn_atom();
Atom vol_atom();
Atom kappa_atom();
Atom cgamma_atom();
Atom log_atom(const exact::Rational& argument);        // argument > 0
Atom log_gamma_atom(const exact::Rational& argument);  // argument > 0
Atom approx_log_atom(const std::string& decimal_argument);

// Product of monomials.  Throws std::logic_error if the result would need a
// square of gamma, C_psi, c_n, vol, kappa, C_Gamma, or a second log factor;
// the assembled quantities never require those.
Atom atom_product(const Atom& a, const Atom& b);

struct ClosedForm {
    std::map<Atom, exact::Rational> coefficients;

    bool zero() const { return coefficients.empty(); }
    exact::Rational coefficient(const Atom& a) const;
    // Total coefficient mass on monomials containing C_psi.
    exact::Rational cpsi_weight() const;

    void add(const Atom& a, const exact::Rational& c);
    ClosedForm& operator+=(const ClosedForm& o);
    ClosedForm operator+(const ClosedForm& o) const;
    ClosedForm operator-(const ClosedForm& o) const;
    ClosedForm scaled(const exact::Rational& c) const;
    ClosedForm times(const Atom& a) const;
};

ClosedForm single(const Atom& a, const exact::Rational& c);

using Real50 = boost::multiprecision::cpp_bin_float_50;

// Numeric assignment for the geometry-dependent atoms.  c_n is supplied by
// calibration; pi and gamma come from the library constants.  Evaluating a
// form whose C_psi weight is nonzero throws std::logic_error: that constant
// has no value, it only ever cancels.
struct NumericContext {
    Real50 vol{1};
    Real50 kappa{0};
    Real50 cgamma{0};
    Real50 cn{1};

    Real50 evaluate(const ClosedForm& f) const;
    Real50 evaluate_atom(const Atom& a) const;
};

std::string to_string(const ClosedForm& f);

}  // namespace form
