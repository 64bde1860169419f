#include "kostant.hpp"

#include <stdexcept>

namespace kostant {

using exact::Int;
using exact::Rational;

std::vector<KostantDatum> kostant_data(const lie::Weight& tau, const lie::RankData& rank) {
    if (tau.role != lie::Role::G) throw std::invalid_argument("kostant_data wants a G-weight");
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error("the MA-decomposition is set up for odd d only");
    lie::require_valid(tau, rank);
    const int n = rank.n;
    std::vector<KostantDatum> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        lie::Weight sigma{lie::Role::M, {}};
        sigma.entries.reserve(static_cast<std::size_t>(n));
        // sigma_{tau,k} = (tau_1+1, ..., tau_k+1, tau_{k+2}, ..., tau_{n+1})
        for (int i = 1; i <= k; ++i)
            sigma.entries.push_back(tau.entries[static_cast<std::size_t>(i - 1)] + 1);
        for (int i = k + 2; i <= n + 1; ++i)
            sigma.entries.push_back(tau.entries[static_cast<std::size_t>(i - 1)]);
        Rational lambda = tau.entries[static_cast<std::size_t>(k)] + (n - k);
        out.push_back({k, std::move(sigma), lambda});
    }
    return out;
}

std::vector<DecompositionEntry> full_decomposition(const lie::Weight& tau,
                                                   const lie::RankData& rank) {
    auto data = kostant_data(tau, rank);
    std::vector<DecompositionEntry> out;
    out.reserve(2 * data.size());
    for (const auto& d : data) out.push_back({d.lambda, d.sigma, d.k});
    for (const auto& d : data)
        out.push_back({-d.lambda, lie::w0_action(d.sigma, rank), 2 * rank.n - d.k});
    return out;
}

bool casimir_identity_check(const lie::Weight& tau, const lie::RankData& rank) {
    Rational omega = lie::casimir_G(tau, rank);
    for (const auto& d : kostant_data(tau, rank))
        if (omega != d.lambda * d.lambda + lie::casimir_M(d.sigma, rank)) return false;
    return true;
}

Int alternating_dim_sum(const lie::Weight& tau, const lie::RankData& rank) {
    Int s = 0;
    for (const auto& d : kostant_data(tau, rank)) {
        Int dim = lie::dim_M(d.sigma, rank);
        s += (d.k % 2 == 0) ? dim : -dim;
    }
    return s;
}

}  // namespace kostant
