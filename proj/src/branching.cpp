#include "branching.hpp"

#include <functional>
#include <stdexcept>

#include "characters.hpp"
#include "kostant.hpp"

namespace branching {

using exact::Int;
using exact::Rational;

namespace {

Rational floor_r(const Rational& q) {
    Int n = exact::numer(q), d = exact::denom(q);
    Int f = n / d;
    if (n % d != 0 && n < 0) --f;
    return Rational(f);
}

// smallest value >= lo lying in the integrality class of ref (Z or Z+1/2)
Rational first_in_class(const Rational& lo, const Rational& ref) {
    Rational offset = ref - floor_r(ref);  // 0 or 1/2
    Rational f = floor_r(lo - offset) + offset;
    while (f < lo) f += 1;
    return f;
}

void enumerate_interlaced(const std::vector<std::pair<Rational, Rational>>& ranges,
                          const Rational& ref,
                          const std::function<void(std::vector<Rational>&)>& emit) {
    std::vector<Rational> cur;
    cur.reserve(ranges.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ranges.size()) {
            emit(cur);
            return;
        }
        for (Rational v = first_in_class(ranges[i].first, ref); v <= ranges[i].second; v += 1) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<lie::Weight> branch_K_to_M(const lie::Weight& nu, const lie::RankData& rank) {
    if (nu.role != lie::Role::K) throw std::invalid_argument("branch_K_to_M wants a K-weight");
    lie::require_valid(nu, rank);
    const int n = rank.n;
    const auto& v = nu.entries;
    std::vector<std::pair<Rational, Rational>> ranges;
    if (rank.parity == lie::Parity::odd) {
        // nu_2 >= s_2 >= nu_3 >= ... >= nu_{n+1} >= |s_{n+1}|
        for (int j = 2; j <= n; ++j)
            ranges.emplace_back(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j - 2)]);
        ranges.emplace_back(-v.back(), v.back());
    } else {
        // nu_1 >= s_2 >= nu_2 >= ... >= s_{n+1} >= |nu_{n+1}|
        for (int j = 2; j <= n + 1; ++j) {
            Rational lo = (j == n + 1) ? abs(v.back()) : v[static_cast<std::size_t>(j - 1)];
            ranges.emplace_back(lo, v[static_cast<std::size_t>(j - 2)]);
        }
    }
    std::vector<lie::Weight> out;
    Rational ref = v.empty() ? Rational(0) : v[0];
    enumerate_interlaced(ranges, ref, [&](std::vector<Rational>& entries) {
        out.push_back(lie::Weight{lie::Role::M, entries});
    });
    return out;
}

int mult_K_M(const lie::Weight& nu, const lie::Weight& sigma, const lie::RankData& rank) {
    if (nu.role != lie::Role::K || sigma.role != lie::Role::M)
        throw std::invalid_argument("mult_K_M wants (K-weight, M-weight)");
    lie::require_valid(nu, rank);
    lie::require_valid(sigma, rank);
    const int n = rank.n;
    const auto& v = nu.entries;
    const auto& s = sigma.entries;
    // classes must match for the interlacing chain to be satisfiable
    Rational gap = v[0] - s[0];
    if (!exact::is_integer(gap)) return 0;
    if (rank.parity == lie::Parity::odd) {
        for (int j = 2; j <= n; ++j) {
            if (v[static_cast<std::size_t>(j - 2)] < s[static_cast<std::size_t>(j - 2)]) return 0;
            if (s[static_cast<std::size_t>(j - 2)] < v[static_cast<std::size_t>(j - 1)]) return 0;
        }
        if (v.back() < abs(s.back())) return 0;
    } else {
        for (int j = 2; j <= n + 1; ++j) {
            if (v[static_cast<std::size_t>(j - 2)] < s[static_cast<std::size_t>(j - 2)]) return 0;
            Rational lo = (j == n + 1) ? abs(v.back()) : v[static_cast<std::size_t>(j - 1)];
            if (s[static_cast<std::size_t>(j - 2)] < lo) return 0;
        }
    }
    return 1;
}

int BranchingTable::multiplicity(const lie::Weight& nu) const {
    for (const auto& [w, m] : entries)
        if (w == nu) return m;
    return 0;
}

BranchingTable nu_of_sigma(const lie::Weight& sigma, const lie::RankData& rank) {
    if (sigma.role != lie::Role::M) throw std::invalid_argument("nu_of_sigma wants an M-weight");
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error("nu_of_sigma is an odd-d construction");
    lie::require_valid(sigma, rank);
    if (sigma.entries.back() < 0)
        throw std::invalid_argument("nu_of_sigma needs k_{n+1}(sigma) >= 0; apply w0 first");
    const int n = rank.n;
    BranchingTable table{sigma, {}};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        lie::Weight nu{lie::Role::K, sigma.entries};
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) nu.entries[static_cast<std::size_t>(i)] -= 1;
        if (!validate_weight(nu, rank)) continue;  // non-dominant shifts drop out
        int sign = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
        table.entries.emplace_back(std::move(nu), sign);
    }
    return table;
}

bool verify_iota(const lie::Weight& sigma, const lie::RankData& rank) {
    lie::require_valid(sigma, rank);
    lie::Weight sp = sigma;
    if (sp.entries.back() < 0) sp = lie::w0_action(sp, rank);
    auto table = nu_of_sigma(sp, rank);
    std::map<lie::Weight, Int> acc;
    for (const auto& [nu, m] : table.entries)
        for (const auto& s : branch_K_to_M(nu, rank)) {
            acc[s] += m;
            if (acc[s] == 0) acc.erase(s);
        }
    std::map<lie::Weight, Int> want;
    want[sp] += 1;
    want[lie::w0_action(sp, rank)] += 1;
    if (sp == lie::w0_action(sp, rank)) want[sp] = 1;
    return acc == want;
}

std::pair<Int, Int> alternating_p_identity(const lie::Weight& tau, const lie::Weight& nu,
                                           const lie::RankData& rank) {
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error("alternating_p_identity is an odd-d statement");
    lie::require_valid(tau, rank);
    lie::require_valid(nu, rank);
    if (tau.entries.back() < 1)
        throw std::domain_error(
            "alternating_p_identity needs tau_{n+1} >= 1 (no level may be w0-fixed)");

    // closed-form side
    Int rhs = 0;
    for (const auto& d : kostant::kostant_data(tau, rank)) {
        int m = nu_of_sigma(d.sigma, rank).multiplicity(nu);
        rhs += (d.k % 2 == 0) ? -m : m;
    }

    // oracle side: decompose Lambda^p p* (x) tau|K for every p
    if (rank.n > 2)
        throw std::domain_error("character oracle refuses n > 2 (cost guard)");
    const int n = rank.n, d = 2 * n + 1;
    auto tau_char = chars::character(chars::SeriesType::D, n + 1, tau.entries);
    auto res = chars::restrict_drop_first(tau_char);
    Int lhs = 0;
    for (int p = 1; p <= d; ++p) {
        auto prod = res * chars::exterior_power_std(chars::SeriesType::B, n, p);
        auto decomp = chars::decompose(chars::SeriesType::B, n, std::move(prod));
        auto it = decomp.find(nu.entries);
        if (it == decomp.end()) continue;
        Int term = Int(p) * it->second;
        lhs += (p % 2 == 0) ? term : -term;
    }
    return {lhs, rhs};
}

Rational max_casimir_gap(const lie::Weight& tau, const lie::RankData& rank) {
    if (tau.role != lie::Role::G) throw std::invalid_argument("max_casimir_gap wants a G-weight");
    lie::require_valid(tau, rank);
    const int n = rank.n;
    Rational omega = lie::casimir_G(tau, rank);
    bool found = false;
    Rational best(0);
    std::vector<std::pair<Rational, Rational>> ranges;
    for (int j = 2; j <= n + 1; ++j) {
        Rational b = tau.entries[static_cast<std::size_t>(j - 2)] + 1;
        ranges.emplace_back(-b, b);
    }
    enumerate_interlaced(ranges, tau.entries[0], [&](std::vector<Rational>& entries) {
        lie::Weight sigma{lie::Role::M, entries};
        if (!validate_weight(sigma, rank)) return;
        Rational gap = omega - lie::casimir_M(sigma, rank);
        if (!found || gap < best) {
            best = gap;
            found = true;
        }
    });
    if (!found) throw std::logic_error("empty dominance box");
    return best;
}

}  // namespace branching
