#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "branching.hpp"
#include "cfunc.hpp"
#include "characters.hpp"
#include "mellin.hpp"
#include "torsion.hpp"

namespace torsion {

namespace {

// One (nu, sigma) pair of the cusp sum with its alternating-degree weight
// a_nu = sum_p (-1)^p p [Lambda^p p* x tau|K : nu] and the spectral gap.
struct CuspRecord {
    lie::Weight nu;
    lie::Weight sigma;
    double coeff = 0.0;  // a_nu * dim sigma
    double gap = 0.0;    // tau(Omega) - c(sigma), >= 1/4
};

std::vector<CuspRecord> cusp_records(const lie::Weight& tau, const lie::RankData& rank) {
    const int r = rank.n + 1;  // rank of the maximal compact subgroup
    const chars::LaurentPoly tau_k =
        chars::character(chars::SeriesType::B, r, tau.entries);

    std::map<std::vector<exact::Rational>, exact::Int> a_nu;
    for (int p = 1; p <= 2 * r; ++p) {
        const chars::LaurentPoly prod =
            chars::exterior_power_std(chars::SeriesType::D, r, p) * tau_k;
        const exact::Int signed_p = (p % 2 == 0) ? exact::Int(p) : exact::Int(-p);
        for (const auto& [nu, mult] : chars::decompose(chars::SeriesType::D, r, prod))
            a_nu[nu] += signed_p * mult;
    }

    const exact::Rational tau_omega = lie::casimir_G(tau, rank);
    std::vector<CuspRecord> out;
    for (const auto& [nu_entries, coeff] : a_nu) {
        if (coeff == 0) continue;
        const lie::Weight nu{lie::Role::K, nu_entries};
        for (const auto& sigma : branching::branch_K_to_M(nu, rank)) {
            const exact::Rational gap = tau_omega - lie::casimir_M(sigma, rank);
            if (!(gap > 0)) throw std::logic_error("phi_even: nonpositive Casimir gap");
            CuspRecord rec;
            rec.nu = nu;
            rec.sigma = sigma;
            rec.coeff =
                static_cast<double>(coeff) * static_cast<double>(lie::dim_M(sigma, rank));
            rec.gap = static_cast<double>(gap);
            out.push_back(rec);
        }
    }
    return out;
}

// Contour integral of exp(-t z^2) (c'/c)(z) over the real line indented by a
// lower half-circle of radius eps around z = 0: two rays plus the arc.  The
// 1/z poles of the two ray directions cancel in the summed integrand.
std::complex<double> contour_integral(const lie::Weight& sigma, const lie::Weight& nu,
                                      double t, const lie::RankData& rank,
                                      const PhiEvenConfig& cfg) {
    using boost::math::constants::pi;
    const double zmax = std::sqrt(41.0 / t);

    std::complex<double> rays(0.0, 0.0);
    if (zmax > cfg.epsilon) {
        auto ray = [&](double x) {
            const auto lp = cfunc::c_log_derivative_even(sigma, nu, {x, 0.0}, rank);
            const auto lm = cfunc::c_log_derivative_even(sigma, nu, {-x, 0.0}, rank);
            return std::exp(-t * x * x) * (lp + lm);
        };
        rays = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            ray, cfg.epsilon, zmax, cfg.max_depth, cfg.quad_tol);
    }

    auto arc = [&](double th) {
        const std::complex<double> z = std::polar(cfg.epsilon, th);
        // dz = i z dtheta
        return std::exp(-t * z * z) * cfunc::c_log_derivative_even(sigma, nu, z, rank) *
               z * std::complex<double>(0.0, 1.0);
    };
    const std::complex<double> circle =
        boost::math::quadrature::gauss<double, 40>::integrate(arc, pi<double>(),
                                                              2.0 * pi<double>());
    return rays + circle;
}

}  // namespace

double phi_even(const lie::Weight& lambda_weight, const lie::RankData& rank,
                const PhiEvenConfig& cfg) {
    if (rank.parity != lie::Parity::even)
        throw std::domain_error("phi_even: even-dimensional ranks only");
    if (rank.n > 2) throw std::domain_error("phi_even: supported up to rank n = 2");
    if (lambda_weight.role != lie::Role::G)
        throw std::invalid_argument("phi_even: expected a G-side weight");
    lie::require_valid(lambda_weight, rank);
    if (!(cfg.epsilon > 0 && cfg.epsilon < 0.25))
        throw std::invalid_argument("phi_even: contour radius must lie in (0, 1/4)");

    const auto records = cusp_records(lambda_weight, rank);

    auto f = [&](double t) {
        std::complex<double> s(0.0, 0.0);
        for (const auto& rec : records) {
            const double damp = std::exp(-t * rec.gap);
            if (damp == 0.0) continue;  // skip the contour once fully damped
            s += rec.coeff * damp * contour_integral(rec.sigma, rec.nu, t, rank, cfg);
        }
        const std::complex<double> jt = std::complex<double>(0.0, 1.0) * s /
                                        (4.0 * boost::math::constants::pi<double>());
        return jt.real();
    };

    std::vector<mellin::SmallTTerm> ladder;
    for (int k = -(rank.n + 1); k <= 6; ++k)
        ladder.push_back({static_cast<double>(k), false});
    for (int j = -1; j <= 13; j += 2) {
        ladder.push_back({j / 2.0, false});
        ladder.push_back({j / 2.0, true});
    }
    mellin::QuadratureConfig mcfg;
    mcfg.fit_points = 96;
    return 0.5 * mellin::numeric_mellin_finite_part(f, ladder, mcfg);
}

}  // namespace torsion
