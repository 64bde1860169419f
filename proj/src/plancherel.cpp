#include "plancherel.hpp"

#include <map>
#include <stdexcept>

#include "special.hpp"

namespace plancherel {

using exact::Int;
using exact::RatPoly;
using exact::Rational;

Rational pi_product(const std::vector<Rational>& xi) {
    Rational p(1);
    for (std::size_t i = 0; i < xi.size(); ++i)
        for (std::size_t j = i + 1; j < xi.size(); ++j)
            p *= (xi[i] - xi[j]) * (xi[i] + xi[j]);
    return p;
}

namespace {

// xi_j = k_j(sigma) + rho_j for j = 2..n+1
std::vector<Rational> shifted_entries(const lie::Weight& sigma, const lie::RankData& rank) {
    auto rho = lie::rho_values(rank.n, rank.parity);
    std::vector<Rational> xi(sigma.entries);
    for (std::size_t i = 0; i < xi.size(); ++i) xi[i] += rho[i + 1];
    return xi;
}

void require_odd_M(const lie::Weight& sigma, const lie::RankData& rank, const char* who) {
    if (sigma.role != lie::Role::M)
        throw std::invalid_argument(std::string(who) + " wants an M-weight");
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error(std::string(who) + " is defined for odd d only");
    lie::require_valid(sigma, rank);
}

}  // namespace

RatPoly plancherel_polynomial(const lie::Weight& sigma, const lie::RankData& rank) {
    require_odd_M(sigma, rank, "plancherel_polynomial");
    auto xi = shifted_entries(sigma, rank);
    auto rho = lie::rho_values(rank.n, rank.parity);
    std::vector<Rational> rho_m(rho.begin() + 1, rho.end());
    // - prod_j (z^2 - xi_j^2) * Pi(xi) / (prod_j (rho_1^2 - rho_j^2) * Pi(rho_M))
    RatPoly num{Rational(-1)};
    for (const auto& x : xi)
        num *= RatPoly(std::vector<Rational>{-x * x, Rational(0), Rational(1)});
    Rational den(1);
    for (const auto& r : rho_m) den *= rho[0] * rho[0] - r * r;
    return num.scaled(pi_product(xi) / (den * pi_product(rho_m)));
}

RatPoly p_j(const lie::Weight& sigma, int j, const lie::RankData& rank) {
    require_odd_M(sigma, rank, "p_j");
    if (j < 2 || j > rank.n + 1) throw std::invalid_argument("p_j index j must lie in 2..n+1");
    auto xi = shifted_entries(sigma, rank);
    for (std::size_t a = 0; a < xi.size(); ++a)
        for (std::size_t b = a + 1; b < xi.size(); ++b)
            if (xi[a] * xi[a] == xi[b] * xi[b])
                throw std::invalid_argument("coincident shifted entries make P_j singular");
    const Rational& xj = xi[static_cast<std::size_t>(j - 2)];
    RatPoly poly{Rational(lie::dim_M(sigma, rank))};
    for (std::size_t p = 0; p < xi.size(); ++p) {
        if (p == static_cast<std::size_t>(j - 2)) continue;
        Rational d = xj * xj - xi[p] * xi[p];
        poly *= RatPoly(std::vector<Rational>{-xi[p] * xi[p] / d, Rational(0), Rational(-1) / d});
    }
    return poly;
}

Rational eval_at_il(const RatPoly& p, const Rational& l) {
    if (!p.is_even()) throw std::domain_error("eval_at_il needs an even polynomial");
    Rational u = -l * l, acc(0), upow(1);
    for (int k = 0; 2 * k <= p.degree(); ++k) {
        acc += p.coeff(2 * k) * upow;
        upow *= u;
    }
    return acc;
}

RatPoly q_jl(const lie::Weight& sigma, int j, const Rational& l, const lie::RankData& rank) {
    if (l <= 0) throw std::invalid_argument("q_jl needs l > 0");
    RatPoly pj = p_j(sigma, j, rank);
    RatPoly num = (pj - RatPoly(eval_at_il(pj, l))).scaled(2 * l);
    RatPoly den(std::vector<Rational>{l * l, Rational(0), Rational(1)});
    return RatPoly::divide_exact(num, den);
}

OmegaDecomposition omega_decomposition(const lie::Weight& sigma, const lie::RankData& rank) {
    require_odd_M(sigma, rank, "omega_decomposition");
    if (!lie::integral_entries(sigma))
        throw std::domain_error("half-integral Omega decomposition is not supported");
    if (sigma.entries.back() == 0)
        throw std::domain_error("omega_decomposition needs k_{n+1}(sigma) != 0");
    lie::Weight s = sigma.entries.back() < 0 ? lie::w0_action(sigma, rank) : sigma;

    auto xi = shifted_entries(s, rank);
    OmegaDecomposition om;
    om.dim_sigma = lie::dim_M(s, rank);
    om.m0 = exact::numer(s.entries.back()) - 1;
    om.digamma_coefficient = -Rational(om.dim_sigma);

    std::map<Int, Rational> poles;
    for (Int l = 1; l <= om.m0; ++l) poles[l] -= Rational(om.dim_sigma);
    om.poly_part = RatPoly();
    for (int j = 2; j <= rank.n + 1; ++j) {
        RatPoly pj = p_j(s, j, rank);
        Int xj = exact::numer(xi[static_cast<std::size_t>(j - 2)]);
        for (Int l = om.m0 + 1; l < xj; ++l) {
            poles[l] -= eval_at_il(pj, Rational(l));
            om.poly_part -= q_jl(s, j, Rational(l), rank);
        }
        poles[xj] -= Rational(om.dim_sigma, 2);
        om.poly_part -= q_jl(s, j, Rational(xj), rank).scaled(Rational(1, 2));
    }
    for (auto& [l, c] : poles)
        if (c != 0) om.pole_terms.emplace_back(l, c);
    return om;
}

double omega_resum(const OmegaDecomposition& om, double lambda) {
    double v = exact::to_double(om.digamma_coefficient) *
               (2.0 * special::digamma({1.0, lambda}).real() + 2.0 * special::kEulerGamma);
    for (const auto& [l, c] : om.pole_terms) {
        double ld = l.convert_to<double>();
        v += exact::to_double(c) * 2.0 * ld / (lambda * lambda + ld * ld);
    }
    return v + om.poly_part.eval_double(lambda);
}

double omega_direct(const lie::Weight& sigma, double lambda, const lie::RankData& rank) {
    require_odd_M(sigma, rank, "omega_direct");
    auto xi = shifted_entries(sigma, rank);
    double dim = lie::dim_M(sigma, rank).convert_to<double>();
    std::complex<double> acc = -2.0 * dim * special::kEulerGamma;
    for (int j = 2; j <= rank.n + 1; ++j) {
        double xj = exact::to_double(xi[static_cast<std::size_t>(j - 2)]);
        double pj = p_j(sigma, j, rank).eval_double(lambda);
        std::complex<double> il(0.0, lambda);
        std::complex<double> four = special::digamma(1.0 + il + xj) + special::digamma(1.0 - il - xj) +
                                    special::digamma(1.0 + il - xj) + special::digamma(1.0 - il + xj);
        acc -= 0.5 * pj * four;
    }
    return acc.real();
}

}  // namespace plancherel
