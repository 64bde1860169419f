#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "branching.hpp"
#include "cfunc.hpp"
#include "kostant.hpp"
#include "special.hpp"

namespace oracles {

using boost::math::constants::pi;
using boost::math::constants::root_pi;
using exact::Rational;

lie::Weight random_weight(lie::Role role, const lie::RankData& rank, int max_entry,
                          std::mt19937& rng, bool allow_half, bool allow_neg_last) {
    const int count = lie::entry_count(role, rank);
    std::uniform_int_distribution<int> entry(0, max_entry);
    std::uniform_int_distribution<int> coin(0, 1);
    const bool half = allow_half && coin(rng) == 1;

    std::vector<Rational> entries(count);
    for (auto& e : entries) {
        e = Rational(entry(rng));
        if (half) e += Rational(1, 2);
    }
    std::sort(entries.begin(), entries.end(), std::greater<>());
    if (allow_neg_last && coin(rng) == 1) entries.back() = -entries.back();

    lie::Weight w{role, entries};
    lie::require_valid(w, rank);
    return w;
}

double erfcx(double x) {
    if (x < 25.0) return std::exp(x * x) * std::erfc(x);
    // asymptotic series; relative error below 1e-15 in this range
    const double ix2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 6; ++k) {
        term *= -(2 * k - 1) * ix2;
        sum += term;
    }
    return sum / (x * root_pi<double>());
}

double pole_integrand(double t, double c, int j) {
    const double gauss = std::exp(-t * c * c);
    if (j == 0) return gauss;
    // int_R e^{-t x^2}/(x^2+j^2) dx = (pi/j) e^{t j^2} erfc(j sqrt(t))
    return gauss * erfcx(j * std::sqrt(t));
}

double digamma_integrand(double t, double c) {
    auto g = [&](double x) {
        return std::exp(-t * x * x) * special::digamma(std::complex<double>(1.0, x)).real();
    };
    const double half = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, 0.0, std::numeric_limits<double>::infinity(), 12, 1e-13);
    return std::exp(-t * c * c) * 2.0 * half / pi<double>();
}

double poly_gaussian_integrand(double t, const std::vector<double>& q_even, double c) {
    double moment_sum = 0.0;
    for (std::size_t k = 0; k < q_even.size(); ++k)
        moment_sum += q_even[k] * std::tgamma(k + 0.5) *
                      std::pow(t, -(static_cast<double>(k) + 0.5));
    return std::exp(-t * c * c) * moment_sum;
}

double mj_integrand(double t, const std::vector<Rational>& base, int m,
                    const lie::RankData& rank) {
    const lie::Weight tm = lie::tau_m(base, Rational(m), rank);
    double total = 0.0;
    for (const auto& datum : kostant::kostant_data(tm, rank)) {
        const double level_sign = (datum.k % 2 == 1) ? 1.0 : -1.0;
        const Rational shifted =
            datum.lambda * datum.lambda + lie::casimir_M(datum.sigma, rank);

        std::vector<lie::Weight> support;
        for (const auto& [nu, mult] : branching::nu_of_sigma(datum.sigma, rank).entries) {
            if (mult == 0) continue;
            for (const auto& s : branching::branch_K_to_M(nu, rank))
                if (std::find(support.begin(), support.end(), s) == support.end())
                    support.push_back(s);
        }

        for (const auto& sigma : support) {
            const auto poles = cfunc::f_km(sigma, base, m, datum.k, rank).consolidated();
            if (poles.empty()) continue;
            const double dim = static_cast<double>(lie::dim_M(sigma, rank));
            const double delta =
                static_cast<double>(Rational(shifted - lie::casimir_M(sigma, rank)));
            double pole_sum = 0.0;
            for (const auto& [loc, w] : poles) {
                const double a = std::abs(static_cast<double>(loc));
                if (a == 0.0) continue;
                // loc * int_R e^{-t z^2}/(z^2+loc^2) dz = sgn(loc) pi erfcx(|loc| sqrt t)
                pole_sum += w * static_cast<double>(loc) / a * pi<double>() *
                            erfcx(a * std::sqrt(t));
            }
            total += level_sign * dim * std::exp(-t * delta) * pole_sum;
        }
    }
    return total / (4.0 * pi<double>());
}

std::complex<double> c_even_duplication(const lie::Weight& sigma, const lie::Weight& nu,
                                        std::complex<double> z, const lie::RankData& rank) {
    if (rank.parity != lie::Parity::even)
        throw std::domain_error("c_even_duplication: even parity only");
    const auto rho = lie::rho_values(rank.n, rank.parity);
    const std::complex<double> iz(-z.imag(), z.real());

    // Gamma(2iz) 2^{-2iz} = Gamma(iz) Gamma(iz+1/2) / (2 sqrt(pi))
    std::complex<double> log_c = special::log_gamma(iz) + special::log_gamma(iz + 0.5) -
                                 std::log(2.0) - 0.5 * std::log(pi<double>());
    for (int i = 0; i < rank.n; ++i) {
        const double x =
            static_cast<double>(Rational(sigma.entries[i] + rho[i + 1]));
        log_c += special::log_gamma(iz - x) + special::log_gamma(iz + x);
    }
    for (int i = 0; i <= rank.n; ++i) {
        const double x = static_cast<double>(Rational(nu.entries[i] + rho[i]));
        log_c -= special::log_gamma(iz - x + 1.0) + special::log_gamma(iz + x);
    }
    return std::exp(log_c);
}

}  // namespace oracles
