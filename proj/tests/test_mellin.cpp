#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "closed_form.hpp"
#include "mellin.hpp"
#include "ratpoly.hpp"
#include "support/oracles.hpp"

using exact::RatPoly;
using exact::Rational;

namespace {

double rel_gap(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("closed forms of the model integrand shapes") {
    // Gaussian times even polynomial: -2 pi int_0^c P
    const RatPoly P({Rational(1), Rational(0), Rational(-1)});
    const auto pg = mellin::mellin_poly_gaussian(P, Rational(3, 2));
    CHECK(pg.coefficients.size() == 1);
    CHECK(pg.coefficient(form::pi_atom(1)) == Rational(-3, 4));

    const auto pole = mellin::mellin_pole_term(Rational(2), Rational(3));
    CHECK(pole.coefficient(form::log_atom(Rational(5))) == -2);
    const auto half = mellin::mellin_pole_term(Rational(1, 2), Rational(3, 2));
    CHECK(half.coefficient(form::log_atom(Rational(2))) == -2);

    const std::string digits = "7.5825756949558400065880471937280084889844565767679";
    const auto approx = mellin::mellin_pole_term_approx(digits);
    CHECK(approx.coefficient(form::approx_log_atom(digits)) == -2);

    const auto dg = mellin::mellin_digamma(Rational(2));
    CHECK(dg.coefficient(form::log_gamma_atom(Rational(3))) == -2);
    CHECK(dg.coefficient(form::cpsi_atom()) == 1);
    CHECK(dg.cpsi_weight() == 1);

    CHECK_THROWS_AS(mellin::mellin_poly_gaussian(
                        RatPoly(std::vector<Rational>{Rational(0), Rational(1)}),
                        Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(mellin::mellin_poly_gaussian(P, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(mellin::mellin_pole_term(Rational(-1), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("expansion ladder validation") {
    const auto f = [](double t) { return std::exp(-t); };
    CHECK_THROWS_AS(mellin::numeric_mellin_finite_part(f, {}), std::invalid_argument);
    CHECK_THROWS_AS(mellin::numeric_mellin_finite_part(f, {{0.0, true}, {1.0, false}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        mellin::numeric_mellin_finite_part(f, {{1.0, false}, {1.0, false}}),
        std::invalid_argument);
    // a fractional power outside the ladder leaves an irreducible residual
    const auto stray = [](double t) { return std::pow(t, 0.3) * std::exp(-t); };
    CHECK_THROWS_AS(mellin::numeric_mellin_finite_part(stray, mellin::resolvent_ladder()),
                    std::runtime_error);
}

TEST_CASE("resolvent heat integrals against their logarithms") {
    struct Case {
        double c;
        int j;
    };
    for (const auto& cs : {Case{1.0, 0}, Case{2.0, 0}, Case{2.5, 3}, Case{10.0, 1}}) {
        const auto f = [&](double t) { return oracles::pole_integrand(t, cs.c, cs.j); };
        const double got = mellin::numeric_mellin_finite_part(f, mellin::resolvent_ladder());
        const double want = -2.0 * std::log(cs.c + cs.j);
        CHECK(rel_gap(got, want) < 1e-6);
    }
}

TEST_CASE("polynomial Gaussian integrals against the exact area") {
    struct Case {
        RatPoly P;
        Rational c;
    };
    const std::vector<Case> cases{
        {RatPoly(Rational(1)), Rational(2)},
        {RatPoly({Rational(1), Rational(0), Rational(-1)}), Rational(3, 2)},
        {RatPoly({Rational(0), Rational(0), Rational(4, 3), Rational(0), Rational(-1, 3)}),
         Rational(5, 2)},
    };
    for (const auto& cs : cases) {
        const RatPoly Q = cs.P.at_imaginary_argument();
        std::vector<double> q_even;
        for (int k = 0; 2 * k <= Q.degree(); ++k) {
            q_even.push_back(exact::to_double(Q.coeff(2 * k)));
        }
        const double c = exact::to_double(cs.c);
        const auto f = [&](double t) {
            return oracles::poly_gaussian_integrand(t, q_even, c);
        };
        const double got = mellin::numeric_mellin_finite_part(
            f, mellin::gaussian_ladder(cs.P.degree()));
        const double want =
            -2.0 * std::numbers::pi * exact::to_double(cs.P.antiderivative()(cs.c));
        CHECK(rel_gap(got, want) < 1e-8);
    }
}

TEST_CASE("digamma heat integrals in constant-free differences") {
    const auto value = [](double c) {
        const auto f = [&](double t) { return oracles::digamma_integrand(t, c); };
        return mellin::numeric_mellin_finite_part(f, mellin::digamma_ladder());
    };
    const double v1 = value(1.0);
    const double v2 = value(2.0);
    const double v72 = value(3.5);
    const double want21 = -2.0 * (std::lgamma(3.0) - std::lgamma(2.0));
    const double want71 = -2.0 * (std::lgamma(4.5) - std::lgamma(2.0));
    CHECK(rel_gap(v2 - v1, want21) < 1e-6);
    CHECK(rel_gap(v72 - v1, want71) < 1e-6);
}
