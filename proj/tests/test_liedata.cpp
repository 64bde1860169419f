#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liedata.hpp"

using exact::Rational;
using lie::Parity;
using lie::RankData;
using lie::Role;
using lie::Weight;

namespace {
Weight w(Role role, std::vector<Rational> e) { return Weight{role, std::move(e)}; }
}

TEST_CASE("half-sum values along both chains") {
    const auto odd2 = lie::rho_values(2, Parity::odd);
    REQUIRE(odd2.size() == 3);
    CHECK(odd2[0] == 2);
    CHECK(odd2[1] == 1);
    CHECK(odd2[2] == 0);

    const auto even1 = lie::rho_values(1, Parity::even);
    REQUIRE(even1.size() == 2);
    CHECK(even1[0] == Rational(3, 2));
    CHECK(even1[1] == Rational(1, 2));
}

TEST_CASE("dominance and integrality validation") {
    const RankData r2{2, Parity::odd};
    CHECK_NOTHROW(lie::require_valid(w(Role::M, {Rational(1), Rational(-1)}), r2));
    CHECK_THROWS_AS(lie::require_valid(w(Role::M, {Rational(0), Rational(1)}), r2),
                    std::invalid_argument);
    CHECK_THROWS_AS(lie::require_valid(w(Role::M, {Rational(1), Rational(1, 2)}), r2),
                    std::invalid_argument);
    // B-chain last entry must be nonnegative
    CHECK_THROWS_AS(lie::require_valid(w(Role::K, {Rational(1), Rational(-1)}), r2),
                    std::invalid_argument);
    // wrong entry count
    CHECK_THROWS_AS(lie::require_valid(w(Role::M, {Rational(1)}), r2),
                    std::invalid_argument);
}

TEST_CASE("Weyl dimensions at pinned weights") {
    const RankData r2{2, Parity::odd};
    const RankData r1{1, Parity::odd};
    CHECK(lie::dim_M(w(Role::M, {Rational(1), Rational(0)}), r2) == 4);
    CHECK(lie::dim_M(w(Role::M, {Rational(1), Rational(1)}), r2) == 3);
    CHECK(lie::dim_M(w(Role::M, {Rational(1), Rational(-1)}), r2) == 3);
    CHECK(lie::dim_G(w(Role::G, {Rational(1), Rational(0)}), r1) == 4);
    CHECK(lie::dim_G(w(Role::G, {Rational(1), Rational(1)}), r1) == 3);
    CHECK(lie::dim_K(w(Role::K, {Rational(1)}), r1) == 3);
    CHECK(lie::dim_K(w(Role::K, {Rational(1, 2)}), r1) == 2);
}

TEST_CASE("Casimir eigenvalues at pinned weights") {
    const RankData r1{1, Parity::odd};
    const RankData r2{2, Parity::odd};
    CHECK(lie::casimir_M(w(Role::M, {Rational(1)}), r1) == 0);
    CHECK(lie::casimir_M(w(Role::M, {Rational(0)}), r1) == -1);
    CHECK(lie::casimir_M(w(Role::M, {Rational(0), Rational(0)}), r2) == -4);
    CHECK(lie::casimir_G(w(Role::G, {Rational(2), Rational(1)}), r1) == 9);
    CHECK(lie::casimir_G(w(Role::G, {Rational(1), Rational(1), Rational(1)}), r2) == 9);
    // chirality never changes the eigenvalue
    CHECK(lie::casimir_M(w(Role::M, {Rational(2), Rational(-1)}), r2) ==
          lie::casimir_M(w(Role::M, {Rational(2), Rational(1)}), r2));
}

TEST_CASE("long-element action negates the last entry in the D-chain only") {
    const RankData r1{1, Parity::odd};
    const RankData r2{2, Parity::odd};
    CHECK(lie::w0_action(w(Role::M, {Rational(2)}), r1).entries ==
          std::vector<Rational>{Rational(-2)});
    CHECK(lie::w0_action(w(Role::M, {Rational(2), Rational(1)}), r2).entries ==
          (std::vector<Rational>{Rational(2), Rational(-1)}));
    // the B-chain centralizer types are self-conjugate
    const RankData e1{1, Parity::even};
    CHECK(lie::w0_action(w(Role::M, {Rational(2)}), e1).entries ==
          std::vector<Rational>{Rational(2)});
}

TEST_CASE("twist shift adds the level to every entry") {
    const RankData r1{1, Parity::odd};
    const Weight t = lie::tau_m({Rational(1), Rational(1)}, Rational(2), r1);
    CHECK(t.entries == (std::vector<Rational>{Rational(3), Rational(3)}));
}

TEST_CASE("dimension polynomial in the twist level") {
    const RankData r1{1, Parity::odd};
    const auto p = lie::dim_tau_m_polynomial({Rational(1), Rational(1)}, r1);
    REQUIRE(p.degree() == 1);
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 2);
    for (int m = 1; m <= 5; ++m) {
        const Weight t = lie::tau_m({Rational(1), Rational(1)}, Rational(m), r1);
        CHECK(p(Rational(m)) == Rational(lie::dim_G(t, r1)));
    }

    const RankData r2{2, Parity::odd};
    const auto p2 = lie::dim_tau_m_polynomial({Rational(2), Rational(1), Rational(1)}, r2);
    REQUIRE(p2.degree() == 3);
    for (int m = 1; m <= 6; ++m) {
        const Weight t =
            lie::tau_m({Rational(2), Rational(1), Rational(1)}, Rational(m), r2);
        CHECK(p2(Rational(m)) == Rational(lie::dim_G(t, r2)));
    }
}
