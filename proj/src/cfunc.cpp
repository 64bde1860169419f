#include "cfunc.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "branching.hpp"
#include "kostant.hpp"
#include "special.hpp"

namespace cfunc {

using exact::Int;
using exact::Rational;

std::complex<double> PoleList::eval(std::complex<double> z) const {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : terms) {
        acc += static_cast<double>(t.sign) * i / (i * z - exact::to_double(t.location));
    }
    return acc;
}

std::vector<std::pair<Rational, int>> PoleList::consolidated() const {
    std::map<Rational, int> acc;
    for (const auto& t : terms) acc[t.location] += t.sign;
    std::vector<std::pair<Rational, int>> out;
    for (const auto& [loc, w] : acc) {
        if (w != 0) out.emplace_back(loc, w);
    }
    return out;
}

namespace {

// One simple pole written as sign * i/(iz - location) with
// location = loc_sign * (l + rho_j).  l is kept separate because the
// truncated sums cut on l, not on the location itself.
struct RawTerm {
    int sign;
    Rational l;
    Rational rho_j;
};

Rational term_location(const RawTerm& t) {
    const Rational shifted = t.l + t.rho_j;
    return t.sign > 0 ? shifted : Rational(-shifted);
}

// Index sets of the odd-d logarithmic derivative: for each j,
//   +i/(iz-l-rho_j)  over |k_j(sigma)| <  l <= k_j(nu)
//   -i/(iz+l+rho_j)  over |k_j(sigma)| <= l <= k_j(nu)
// Returns nothing when nu does not contain sigma (c is the defined zero).
std::optional<std::vector<RawTerm>> raw_log_derivative(const lie::Weight& sigma,
                                                       const lie::Weight& nu,
                                                       const lie::RankData& rank) {
    if (rank.parity != lie::Parity::odd) {
        throw std::domain_error("c_log_derivative: odd d only");
    }
    lie::require_valid(sigma, rank);
    lie::require_valid(nu, rank);
    if (sigma.role != lie::Role::M || nu.role != lie::Role::K) {
        throw std::invalid_argument("c_log_derivative: expects (M-weight, K-weight)");
    }
    if (branching::mult_K_M(nu, sigma, rank) == 0) return std::nullopt;

    const auto rho = lie::rho_values(rank.n, rank.parity);
    std::vector<RawTerm> out;
    for (int j = 0; j < rank.n; ++j) {
        const Rational a = abs(sigma.entries[j]);
        const Rational b = nu.entries[j];
        const Rational rj = rho[j + 1];  // rho_{j+2} in 1-based indexing
        for (Rational l = a + 1; l <= b; l += 1) out.push_back({+1, l, rj});
        for (Rational l = a; l <= b; l += 1) out.push_back({-1, l, rj});
    }
    return out;
}

PoleList merged_f_km(const lie::Weight& sigma, const std::vector<Rational>& base, int m,
                     int k, const lie::RankData& rank, bool truncate) {
    if (m < 1) throw std::invalid_argument("f_km: m >= 1 required");
    if (k < 0 || k > rank.n) throw std::invalid_argument("f_km: level out of range");
    const lie::Weight tm = lie::tau_m(base, m, rank);
    const auto data = kostant::kostant_data(tm, rank);
    const branching::BranchingTable table = branching::nu_of_sigma(data[k].sigma, rank);

    PoleList out;
    for (const auto& [nu, mult] : table.entries) {
        if (mult == 0) continue;
        const auto raw = raw_log_derivative(sigma, nu, rank);
        if (!raw) continue;  // [nu:sigma] = 0: c is the defined zero
        for (const auto& t : *raw) {
            if (truncate && t.l < m) continue;
            out.terms.push_back({mult * t.sign, term_location(t)});
        }
    }
    return out;
}

// Nearest nonpositive integer distance, used to guard the Gamma factors.
bool near_gamma_pole(std::complex<double> a, double eps) {
    if (a.real() > 0.5) return false;
    const double r = std::round(a.real());
    return std::abs(a.real() - r) < eps && std::abs(a.imag()) < eps;
}

struct EvenGammaArgs {
    std::vector<std::complex<double>> numerator;    // includes Gamma(2iz)
    std::vector<std::complex<double>> denominator;  // the 2^{2iz} factor is separate
};

EvenGammaArgs even_arguments(const lie::Weight& sigma, const lie::Weight& nu,
                             std::complex<double> z, const lie::RankData& rank) {
    if (rank.parity != lie::Parity::even) {
        throw std::domain_error("c_function_even: even d only");
    }
    lie::require_valid(sigma, rank);
    lie::require_valid(nu, rank);
    if (sigma.role != lie::Role::M || nu.role != lie::Role::K) {
        throw std::invalid_argument("c_function_even: expects (M-weight, K-weight)");
    }
    const auto rho = lie::rho_values(rank.n, rank.parity);
    const std::complex<double> iz(-z.imag(), z.real());

    EvenGammaArgs args;
    args.numerator.push_back(2.0 * iz);
    for (int j = 0; j < rank.n; ++j) {
        const double shift = exact::to_double(sigma.entries[j] + rho[j + 1]);
        args.numerator.push_back(iz - shift);
        args.numerator.push_back(iz + shift);
    }
    for (int j = 0; j <= rank.n; ++j) {
        const double shift = exact::to_double(nu.entries[j] + rho[j]);
        args.denominator.push_back(iz - shift + 1.0);
        args.denominator.push_back(iz + shift);
    }
    return args;
}

}  // namespace

std::optional<PoleList> c_log_derivative(const lie::Weight& sigma, const lie::Weight& nu,
                                         const lie::RankData& rank) {
    const auto raw = raw_log_derivative(sigma, nu, rank);
    if (!raw) return std::nullopt;
    PoleList out;
    for (const auto& t : *raw) out.terms.push_back({t.sign, term_location(t)});
    return out;
}

PoleList f_km(const lie::Weight& sigma, const std::vector<Rational>& base, int m, int k,
              const lie::RankData& rank) {
    return merged_f_km(sigma, base, m, k, rank, true);
}

PoleList f_km_untruncated(const lie::Weight& sigma, const std::vector<Rational>& base,
                          int m, int k, const lie::RankData& rank) {
    return merged_f_km(sigma, base, m, k, rank, false);
}

std::complex<double> c_function_even(const lie::Weight& sigma, const lie::Weight& nu,
                                     std::complex<double> z, const lie::RankData& rank,
                                     double pole_eps) {
    const auto args = even_arguments(sigma, nu, z, rank);
    std::complex<double> log_c{0.0, 0.0};
    for (const auto& a : args.numerator) {
        if (near_gamma_pole(a, pole_eps)) {
            throw std::domain_error("c_function_even: z too close to a pole");
        }
        log_c += special::log_gamma(a);
    }
    for (const auto& a : args.denominator) {
        if (near_gamma_pole(a, pole_eps)) {
            throw std::domain_error("c_function_even: z too close to a zero");
        }
        log_c -= special::log_gamma(a);
    }
    const std::complex<double> iz(-z.imag(), z.real());
    log_c -= 2.0 * iz * std::log(2.0);
    return std::exp(log_c);
}

std::complex<double> c_log_derivative_even(const lie::Weight& sigma, const lie::Weight& nu,
                                           std::complex<double> z,
                                           const lie::RankData& rank) {
    const auto args = even_arguments(sigma, nu, z, rank);
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> acc = 2.0 * i * special::digamma(args.numerator.front());
    for (std::size_t p = 1; p < args.numerator.size(); ++p) {
        acc += i * special::digamma(args.numerator[p]);
    }
    for (const auto& a : args.denominator) acc -= i * special::digamma(a);
    acc -= 2.0 * i * std::log(2.0);
    return acc;
}

}  // namespace cfunc
