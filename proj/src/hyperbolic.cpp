#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "kostant.hpp"
#include "torsion.hpp"

namespace torsion {

namespace {

using std::complex;

int permutation_sign(const std::vector<int>& idx) {
    int inv = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (idx[i] > idx[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// Alternating exponential sum over the even-sign-change Weyl group of D_n:
//   A_mu(theta) = sum_w det(w) exp(i<w mu, theta>).
complex<double> alternating_sum(const std::vector<double>& mu,
                                const std::vector<double>& theta) {
    const int n = static_cast<int>(theta.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    complex<double> acc(0.0, 0.0);
    do {
        const double psign = permutation_sign(idx);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            double phase = 0.0;
            for (int j = 0; j < n; ++j) {
                const double sign = (mask >> j) & 1u ? -1.0 : 1.0;
                phase += sign * mu[idx[j]] * theta[j];
            }
            acc += psign * std::polar(1.0, phase);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

// chi_sigma(theta) by the Weyl character formula; degenerate denominators
// are resolved by a graded perturbation of the angles.
complex<double> character_value(const lie::Weight& sigma, std::vector<double> theta,
                                const lie::RankData& rank) {
    const int n = rank.n;
    std::vector<double> rho(n), shifted(n);
    for (int j = 0; j < n; ++j) rho[j] = n - 1 - j;
    for (int j = 0; j < n; ++j)
        shifted[j] = static_cast<double>(sigma.entries[j]) + rho[j];

    double delta = 1e-8;
    complex<double> den = alternating_sum(rho, theta);
    while (std::abs(den) < 1e-12) {
        if (delta > 1e-3)
            throw std::runtime_error("hyperbolic weight: angle degeneracy persists");
        for (int j = 0; j < n; ++j) theta[j] += delta * (j + 1);
        std::cerr << "hyperbolic weight: degenerate angles, perturbed by " << delta
                  << "\n";
        den = alternating_sum(rho, theta);
        delta *= 100.0;
    }
    return alternating_sum(shifted, theta) / den;
}

bool is_trivial(const lie::Weight& sigma) {
    return std::all_of(sigma.entries.begin(), sigma.entries.end(),
                       [](const exact::Rational& e) { return e == 0; });
}

void validate_record(const GeodesicRecord& rec, const lie::RankData& rank) {
    if (rec.length <= 0 || rec.primitive_length <= 0 ||
        rec.primitive_length > rec.length + 1e-9)
        throw std::invalid_argument("geodesic record: need 0 < primitive length <= length");
    if (static_cast<int>(rec.angles.size()) != rank.n)
        throw std::invalid_argument("geodesic record: expected one angle per rotation plane");
}

double one_sided_weight(const GeodesicRecord& rec, const lie::Weight& sigma,
                        const lie::RankData& rank) {
    const double el = std::exp(-rec.length);
    double det = 1.0;
    for (double th : rec.angles) det *= 1.0 - 2.0 * el * std::cos(th) + el * el;
    const complex<double> tr =
        is_trivial(sigma) ? complex<double>(1.0, 0.0)
                          : character_value(sigma, rec.angles, rank);
    const complex<double> val =
        std::conj(tr) * std::exp(-static_cast<double>(rank.n) * rec.length) / det;
    return val.real();
}

}  // namespace

double hyperbolic_weight(const GeodesicRecord& rec, const lie::Weight& sigma,
                         const lie::RankData& rank) {
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error("hyperbolic_weight: odd-dimensional quotients only");
    lie::require_valid(sigma, rank);
    validate_record(rec, rank);
    // the imaginary parts of the two chiralities cancel, so summing the real
    // parts of L(sigma) and L(w0 sigma) is the symmetrized weight
    return one_sided_weight(rec, sigma, rank) +
           one_sided_weight(rec, lie::w0_action(sigma, rank), rank);
}

double H_series(double t, const std::vector<exact::Rational>& base, int m,
                const std::vector<GeodesicRecord>& table, const lie::RankData& rank) {
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error("H_series: odd-dimensional quotients only");
    if (!(t > 0)) throw std::invalid_argument("H_series: t > 0");
    const lie::Weight tm = lie::tau_m(base, exact::Rational(m), rank);
    const double gauss_norm =
        std::sqrt(4.0 * boost::math::constants::pi<double>() * t);

    double sum = 0.0;
    for (const auto& datum : kostant::kostant_data(tm, rank)) {
        const double lam = static_cast<double>(datum.lambda);
        const double level = (datum.k % 2 == 1 ? 1.0 : -1.0) * std::exp(-t * lam * lam);
        for (const auto& rec : table) {
            const double w = hyperbolic_weight(rec, datum.sigma, rank);
            sum += level * rec.primitive_length * w *
                   std::exp(-rec.length * rec.length / (4.0 * t)) / gauss_norm;
        }
    }
    return sum;
}

}  // namespace torsion
