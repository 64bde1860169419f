#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "closed_form.hpp"
#include "liedata.hpp"
#include "serialize.hpp"
#include "torsion.hpp"

using exact::Rational;
using form::Real50;
using lie::Parity;
using lie::RankData;
using lie::Role;
using lie::Weight;

namespace {

const RankData kOdd1{1, Parity::odd};
const RankData kOdd2{2, Parity::odd};
const std::vector<Rational> kBase11{Rational(1), Rational(1)};

form::Atom l2_atom() {
    return form::atom_product(form::atom_product(form::pi_atom(1), form::cn_atom()),
                              form::vol_atom());
}

form::Atom kappa_log(const Rational& arg) {
    return form::atom_product(form::kappa_atom(), form::log_atom(arg));
}

form::Atom kappa_log_gamma(const Rational& arg) {
    return form::atom_product(form::kappa_atom(), form::log_gamma_atom(arg));
}

}  // namespace

TEST_CASE("leading asymptotic constants") {
    CHECK(torsion::c_of_n_rational(1) == 1);
    CHECK(torsion::c_of_n_rational(2) == Rational(-4, 3));
    const auto c1 = torsion::c_of_n(1);
    CHECK(c1.coefficient(form::pi_atom(-1)) == 1);

    CHECK(torsion::calibrate_cn(1, kBase11) == Rational(1, 2));
    CHECK(torsion::calibrate_cn(1, {Rational(2), Rational(1)}) == Rational(1, 2));

    const std::vector<Rational> ones3{Rational(1), Rational(1), Rational(1)};
    const std::vector<Rational> mixed3{Rational(3), Rational(2), Rational(1)};
    const Rational q2 = torsion::calibrate_cn(2, ones3);
    CHECK(q2 == torsion::calibrate_cn(2, mixed3));
    CHECK(q2 == Rational(2, 3));
    CHECK(q2 > 0);
}

TEST_CASE("square-torsion polynomial at rank one") {
    const auto r = torsion::l2_polynomial(kBase11, kOdd1);
    REQUIRE(r.degree() == 2);
    CHECK(r.coeff(0) == Rational(-26, 3));
    CHECK(r.coeff(1) == -12);
    CHECK(r.coeff(2) == -4);

    const std::vector<Rational> ones3{Rational(1), Rational(1), Rational(1)};
    const auto r2 = torsion::l2_polynomial(ones3, kOdd2);
    CHECK(r2.degree() == 4);
    CHECK(lie::dim_tau_m_polynomial(ones3, kOdd2).degree() == 3);
}

TEST_CASE("closed forms of the Mellin terms at twist level two") {
    const auto mi = torsion::MI_term(kBase11, 2, kOdd1);
    CHECK(mi.coefficients.size() == 1);
    CHECK(mi.coefficient(l2_atom()) == Rational(-292, 3));

    const auto l2 = torsion::l2_closed_form(kBase11, 2, kOdd1);
    CHECK(l2.coefficient(l2_atom()) == Rational(-146, 3));

    const auto mt = torsion::MT_term(kBase11, 2, kOdd1);
    CHECK(mt.coefficients.size() == 1);
    CHECK(mt.coefficient(form::cgamma_atom()) == 1);

    const auto mical = torsion::MIcal_term(kBase11, 2, kOdd1);
    CHECK(mical.coefficient(form::atom_product(form::euler_gamma_atom(),
                                               form::kappa_atom())) == -2);
    CHECK(mical.coefficient(kappa_log(Rational(5))) == 2);
    CHECK(mical.coefficient(kappa_log_gamma(Rational(5))) == 2);
    CHECK(mical.coefficient(kappa_log_gamma(Rational(6))) == -2);
    CHECK(mical.cpsi_weight() == 0);
}

TEST_CASE("digamma constant cancels at every twist level") {
    for (int m = 1; m <= 10; ++m) {
        CHECK(torsion::MIcal_term(kBase11, m, kOdd1).cpsi_weight() == 0);
    }
    const std::vector<Rational> ones3{Rational(1), Rational(1), Rational(1)};
    for (int m = 1; m <= 4; ++m) {
        CHECK(torsion::MIcal_term(ones3, m, kOdd2).cpsi_weight() == 0);
    }
}

TEST_CASE("cusp Gamma term collapses to minus twice Euler's constant") {
    // For the all-ones base at rank one the log Gamma and log atoms cancel
    // pairwise, leaving -2 gamma kappa at every twist level.
    form::NumericContext ctx;
    ctx.kappa = 1;
    const Real50 target = -2 * boost::math::constants::euler<Real50>();
    for (int m : {2, 7}) {
        const auto mical = torsion::MIcal_term(kBase11, m, kOdd1);
        const Real50 got = ctx.evaluate(mical);
        CHECK(static_cast<double>(abs(got - target)) < 1e-40);
    }
}

TEST_CASE("intertwining term against a half-integer square root assembly") {
    const auto mj = torsion::MJ_term(kBase11, 2, kOdd1);
    CHECK(mj.coefficient(kappa_log(Rational(8))) == -1);
    CHECK(mj.coefficient(kappa_log(Rational(9))) == -1);

    int plus_two = 0, minus_two = 0, exact_logs = 0;
    for (const auto& [atom, coeff] : mj.coefficients) {
        REQUIRE(atom.kappa);
        if (!atom.log_exact) {
            if (coeff == 2) ++plus_two;
            if (coeff == -2) ++minus_two;
        } else {
            ++exact_logs;
        }
    }
    CHECK(plus_two == 2);
    CHECK(minus_two == 2);
    CHECK(exact_logs == 2);

    form::NumericContext ctx;
    ctx.kappa = 1;
    const Real50 got = ctx.evaluate(mj);

    const Real50 s21 = sqrt(Real50(21));
    const Real50 s24 = sqrt(Real50(24));
    const Real50 hand = 2 * log((s21 + 3) / (s21 + 4)) + 2 * log((s24 + 3) / (s24 + 4)) -
                        log(Real50(8)) - log(Real50(9));
    CHECK(static_cast<double>(abs(got - hand)) < 1e-45);
    CHECK(std::abs(static_cast<double>(got) - (-4.762834431317642)) < 1e-12);
}

TEST_CASE("twist level below the dominance floor is rejected") {
    const std::vector<Rational> neg{Rational(1), Rational(-1)};
    CHECK_THROWS_AS(torsion::MIcal_term(neg, 1, kOdd1), std::domain_error);
    CHECK_THROWS_AS(torsion::MJ_term(neg, 1, kOdd1), std::domain_error);
    CHECK_THROWS_AS(torsion::l2_closed_form(kBase11, 0, kOdd1), std::invalid_argument);
}

TEST_CASE("term report ties the pieces together") {
    const torsion::GeometryInput geom{1.0, 1, 0.3};
    const auto rep = torsion::term_report(kBase11, 2, kOdd1, geom);

    const Real50 half_sum =
        (rep.numeric_mi + rep.numeric_mt + rep.numeric_mical + rep.numeric_mj) / 2;
    CHECK(static_cast<double>(abs(rep.numeric_total - half_sum)) < 1e-45);
    CHECK(static_cast<double>(abs(rep.residual - abs(rep.numeric_total - rep.numeric_l2))) <
          1e-45);

    CHECK(std::abs(static_cast<double>(rep.numeric_l2) - (-7.745540563805573)) < 1e-12);
    CHECK(std::abs(static_cast<double>(rep.numeric_total) - (-10.55417344436593)) < 1e-12);
    CHECK(std::abs(static_cast<double>(rep.residual) - 2.808632880560354) < 1e-12);

    const auto direct = torsion::nonhyperbolic_log_torsion(kBase11, 2, kOdd1, geom);
    CHECK(static_cast<double>(abs(direct.second - rep.numeric_total)) < 1e-45);
}

TEST_CASE("calibrated context matches the closed normalization at rank one") {
    const torsion::GeometryInput geom;
    const auto ctx = torsion::make_context(kOdd1, geom);
    const Real50 pi = boost::math::constants::pi<Real50>();
    CHECK(static_cast<double>(abs(ctx.cn - 1 / (2 * pi * pi))) < 1e-45);
}

TEST_CASE("asymptotic sweep produces the quadratic leading behaviour") {
    const torsion::GeometryInput geom{1.0, 1, 0.3};
    CHECK_THROWS_AS(torsion::asymptotic_sweep(kBase11, 10, 40, 10, kOdd1, geom),
                    std::invalid_argument);
    const auto sweep = torsion::asymptotic_sweep(kBase11, 10, 80, 10, kOdd1, geom);
    REQUIRE(sweep.rows.size() == 8);
    CHECK(std::abs(sweep.l2_slope - 2.0) < 0.3);
    CHECK(sweep.residual_slope < 1.2);
}

TEST_CASE("symmetrized geodesic weights at explicit angles") {
    torsion::GeodesicRecord rec;
    rec.length = 1.5;
    rec.primitive_length = 1.5;
    rec.angles = {0.7};

    const double el = std::exp(-rec.length);
    const double det = 1.0 - 2.0 * el * std::cos(0.7) + el * el;

    const double trivial =
        torsion::hyperbolic_weight(rec, Weight{Role::M, {Rational(0)}}, kOdd1);
    CHECK(std::abs(trivial - 2.0 * el / det) < 1e-14);

    const double charged =
        torsion::hyperbolic_weight(rec, Weight{Role::M, {Rational(1)}}, kOdd1);
    CHECK(std::abs(charged - 2.0 * std::cos(0.7) * el / det) < 1e-14);

    torsion::GeodesicRecord rec2;
    rec2.length = 2.0;
    rec2.primitive_length = 1.0;
    rec2.angles = {0.9, 0.4};
    const double el2 = std::exp(-rec2.length);
    const double det2 = (1.0 - 2.0 * el2 * std::cos(0.9) + el2 * el2) *
                        (1.0 - 2.0 * el2 * std::cos(0.4) + el2 * el2);
    const double trivial2 = torsion::hyperbolic_weight(
        rec2, Weight{Role::M, {Rational(0), Rational(0)}}, kOdd2);
    CHECK(std::abs(trivial2 - 2.0 * el2 * el2 / det2) < 1e-14);

    // coincident angles go through the perturbation path and stay finite
    torsion::GeodesicRecord degen = rec2;
    degen.angles = {0.5, 0.5};
    const double perturbed = torsion::hyperbolic_weight(
        degen, Weight{Role::M, {Rational(1), Rational(0)}}, kOdd2);
    CHECK(std::isfinite(perturbed));
}

TEST_CASE("geodesic record validation") {
    torsion::GeodesicRecord bad;
    bad.length = -1.0;
    bad.primitive_length = 1.0;
    bad.angles = {0.1};
    const Weight triv{Role::M, {Rational(0)}};
    CHECK_THROWS_AS(torsion::hyperbolic_weight(bad, triv, kOdd1), std::invalid_argument);
    bad.length = 0.5;  // primitive longer than total
    CHECK_THROWS_AS(torsion::hyperbolic_weight(bad, triv, kOdd1), std::invalid_argument);
    bad.length = 2.0;
    bad.angles = {0.1, 0.2};  // one angle too many at rank one
    CHECK_THROWS_AS(torsion::hyperbolic_weight(bad, triv, kOdd1), std::invalid_argument);
}

TEST_CASE("geodesic table parsing and the truncated heat sum") {
    std::istringstream csv(
        "length,prim_length,theta_1\n"
        "1.5,1.5,0.7\n"
        "3.0,1.5,1.4\n"
        "2.2,2.2,0.0\n");
    const auto table = serialize::load_geodesics_csv(csv, 1);
    REQUIRE(table.size() == 3);
    CHECK(table[1].primitive_length == 1.5);
    CHECK(table[2].angles[0] == 0.0);

    const double h = torsion::H_series(0.5, kBase11, 2, table, kOdd1);
    CHECK(std::abs(h - (-0.00101862116222713)) < 1e-14);
    CHECK_THROWS_AS(torsion::H_series(0.0, kBase11, 2, table, kOdd1),
                    std::invalid_argument);

    std::istringstream wrong_header("length,theta_1\n1.0,0.5\n");
    CHECK_THROWS_AS(serialize::load_geodesics_csv(wrong_header, 1), std::invalid_argument);
}

TEST_CASE("even-dimensional cusp function guards") {
    CHECK_THROWS_AS(torsion::phi_even(Weight{Role::G, {Rational(1), Rational(0)}}, kOdd1),
                    std::domain_error);
    const RankData big{3, Parity::even};
    CHECK_THROWS_AS(
        torsion::phi_even(
            Weight{Role::G, {Rational(1), Rational(0), Rational(0), Rational(0)}}, big),
        std::domain_error);
}

TEST_CASE("even-dimensional cusp function against the rank-one closed value") {
    const RankData even1{1, Parity::even};
    const double phi10 =
        torsion::phi_even(Weight{Role::G, {Rational(1), Rational(0)}}, even1);
    CHECK(std::abs(phi10 - 2.0 * std::log(5.0)) < 2e-6);

    const double phi11 =
        torsion::phi_even(Weight{Role::G, {Rational(1), Rational(1)}}, even1);
    CHECK(std::abs(phi11 - (-1.329495570913723)) < 1e-5);
}
