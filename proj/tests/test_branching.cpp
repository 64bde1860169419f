#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "branching.hpp"
#include "liedata.hpp"
#include "support/oracles.hpp"

using exact::Rational;
using lie::Parity;
using lie::RankData;
using lie::Role;
using lie::Weight;

namespace {
std::vector<Rational> ent(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}
}

TEST_CASE("restriction by interlacing at a pinned weight") {
    const RankData r2{2, Parity::odd};
    const Weight nu{Role::K, ent({2, 1})};
    const auto types = branching::branch_K_to_M(nu, r2);
    REQUIRE(types.size() == 6);
    std::vector<std::vector<Rational>> got;
    for (const auto& s : types) got.push_back(s.entries);
    for (auto want : {ent({1, -1}), ent({1, 0}), ent({1, 1}), ent({2, -1}),
                      ent({2, 0}), ent({2, 1})})
        CHECK(std::find(got.begin(), got.end(), want) != got.end());
    // multiplicity freeness
    for (const auto& s : types) CHECK(branching::mult_K_M(nu, s, r2) == 1);
    CHECK(branching::mult_K_M(nu, Weight{Role::M, ent({3, 0})}, r2) == 0);
}

TEST_CASE("signed inverse table at pinned weights") {
    const RankData r1{1, Parity::odd};
    const auto t1 = branching::nu_of_sigma(Weight{Role::M, ent({3})}, r1);
    REQUIRE(t1.entries.size() == 2);
    CHECK(t1.multiplicity(Weight{Role::K, ent({3})}) == 1);
    CHECK(t1.multiplicity(Weight{Role::K, ent({2})}) == -1);

    const RankData r2{2, Parity::odd};
    const auto t2 = branching::nu_of_sigma(Weight{Role::M, ent({1, 1})}, r2);
    REQUIRE(t2.entries.size() == 3);
    CHECK(t2.multiplicity(Weight{Role::K, ent({1, 1})}) == 1);
    CHECK(t2.multiplicity(Weight{Role::K, ent({1, 0})}) == -1);
    CHECK(t2.multiplicity(Weight{Role::K, ent({0, 0})}) == 1);

    CHECK_THROWS_AS(branching::nu_of_sigma(Weight{Role::M, ent({2, -1})}, r2),
                    std::invalid_argument);
}

TEST_CASE("inverse table composed with restriction recovers sigma") {
    std::mt19937 rng(77113);
    for (int n = 1; n <= 3; ++n) {
        const RankData rank{n, Parity::odd};
        for (int trial = 0; trial < 25; ++trial) {
            auto sigma = oracles::random_weight(Role::M, rank, 5, rng, true, false);
            CHECK(branching::verify_iota(sigma, rank));
        }
    }
}

TEST_CASE("alternating degree identity and its guard") {
    const RankData r1{1, Parity::odd};
    const Weight tau{Role::G, ent({2, 1})};
    for (int v = 0; v <= 3; ++v) {
        const auto [lhs, rhs] =
            branching::alternating_p_identity(tau, Weight{Role::K, {Rational(v)}}, r1);
        CHECK(lhs == rhs);
    }
    // weights with a w0-fixed level sit outside the identity's hypotheses
    CHECK_THROWS_AS(branching::alternating_p_identity(
                        Weight{Role::G, ent({0, 0})}, Weight{Role::K, {Rational(1)}}, r1),
                    std::domain_error);
}

TEST_CASE("spectral gap lower bound over the enclosing box") {
    const RankData r1{1, Parity::odd};
    const Weight tau{Role::G, ent({3, 2})};
    CHECK(branching::max_casimir_gap(tau, r1) >= Rational(2 * 2));

    const RankData r2{2, Parity::odd};
    const Weight tau2{Role::G, ent({2, 2, 1})};
    CHECK(branching::max_casimir_gap(tau2, r2) >= Rational(1));
}
