#include "liedata.hpp"

#include <stdexcept>

namespace lie {

using exact::Int;
using exact::Rational;

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }
std::string to_string(Role r) {
    switch (r) {
        case Role::G: return "G";
        case Role::K: return "K";
        default: return "M";
    }
}

Parity parity_from_string(const std::string& s) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw std::invalid_argument("parity must be 'odd' or 'even', got '" + s + "'");
}

Role role_from_string(const std::string& s) {
    if (s == "G") return Role::G;
    if (s == "K") return Role::K;
    if (s == "M") return Role::M;
    throw std::invalid_argument("role must be G, K or M, got '" + s + "'");
}

bool Weight::operator<(const Weight& o) const {
    if (role != o.role) return static_cast<int>(role) < static_cast<int>(o.role);
    return entries < o.entries;
}

std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        if (i) s += ",";
        s += exact::format_rational(w.entries[i]);
    }
    return s + ")";
}

std::vector<Rational> rho_values(int n, Parity parity) {
    if (n < 1) throw std::invalid_argument("rank parameter n must be >= 1");
    std::vector<Rational> rho;
    rho.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n + 1; ++j) {
        if (parity == Parity::odd)
            rho.emplace_back(n + 1 - j);
        else
            rho.emplace_back(Rational(2 * n + 3 - 2 * j, 2));  // n + 3/2 - j
    }
    return rho;
}

int entry_count(Role role, const RankData& rank) {
    switch (role) {
        case Role::G: return rank.n + 1;
        case Role::K: return rank.parity == Parity::odd ? rank.n : rank.n + 1;
        default: return rank.n;
    }
}

bool integral_entries(const Weight& w) {
    for (const auto& e : w.entries)
        if (!exact::is_integer(e)) return false;
    return true;
}

namespace {

bool uniform_class(const std::vector<Rational>& v) {
    bool any_half = false, any_int = false;
    for (const auto& e : v) {
        if (exact::is_integer(e))
            any_int = true;
        else if (exact::is_half_integer(e))
            any_half = true;
        else
            return false;
    }
    return !(any_half && any_int);
}

// Dominance chains.  B-like: x_1 >= ... >= x_r >= 0.  D-like:
// x_1 >= ... >= x_{r-1} >= |x_r|.  A single D-entry is unconstrained
// (that is the U(1) factor M = Spin(2) at n=1).
bool dominant_B(const std::vector<Rational>& x) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] < x[i + 1]) return false;
    return x.empty() || x.back() >= 0;
}

bool dominant_D(const std::vector<Rational>& x) {
    if (x.size() <= 1) return true;
    for (std::size_t i = 0; i + 2 < x.size(); ++i)
        if (x[i] < x[i + 1]) return false;
    return x[x.size() - 2] >= abs(x.back());
}

// The root-system shape of the chain for each (role, parity).
bool chain_is_D(Role role, Parity parity) {
    if (role == Role::M) return parity == Parity::odd;
    if (role == Role::K) return parity == Parity::even;
    return parity == Parity::odd;  // G
}

}  // namespace

bool validate_weight(const Weight& w, const RankData& rank) {
    int want = entry_count(w.role, rank);
    if (static_cast<int>(w.entries.size()) != want)
        throw std::invalid_argument("weight for role " + to_string(w.role) + " needs " +
                                    std::to_string(want) + " entries, got " +
                                    std::to_string(w.entries.size()));
    if (!uniform_class(w.entries)) return false;
    return chain_is_D(w.role, rank.parity) ? dominant_D(w.entries) : dominant_B(w.entries);
}

void require_valid(const Weight& w, const RankData& rank) {
    if (!validate_weight(w, rank))
        throw std::invalid_argument("weight " + to_string(w) + " is not dominant for role " +
                                    to_string(w.role));
}

Weight w0_action(const Weight& sigma, const RankData& rank) {
    if (sigma.role != Role::M) throw std::invalid_argument("w0 acts on M-weights");
    require_valid(sigma, rank);
    Weight r = sigma;
    if (rank.parity == Parity::odd) r.entries.back() = -r.entries.back();
    return r;
}

Weight theta_twist(const Weight& tau, const RankData& rank) {
    if (tau.role != Role::G) throw std::invalid_argument("theta twist acts on G-weights");
    if (rank.parity != Parity::odd)
        throw std::domain_error("theta twist is only defined for odd d");
    require_valid(tau, rank);
    Weight r = tau;
    r.entries.back() = -r.entries.back();
    return r;
}

Weight tau_m(const std::vector<Rational>& base, const Rational& m, const RankData& rank) {
    Weight w{Role::G, base};
    require_valid(w, rank);
    for (auto& e : w.entries) e += m;
    return w;
}

namespace {

// Weyl dimension formula in the e_i coordinates.  For both B_r and D_r the
// positive roots e_i +- e_j contribute prod_{i<j} (xi_i^2-xi_j^2)/(rho_i^2-rho_j^2)
// with xi = lambda+rho; B_r adds the short-root factor prod_i xi_i/rho_i.
// Here rho is the half-sum for the chain type: (r-1,...,0) for D_r,
// (r-1/2,...,1/2) for B_r.
Int weyl_dim(bool type_D, const std::vector<Rational>& lambda) {
    const int r = static_cast<int>(lambda.size());
    std::vector<Rational> xi(lambda), rho(lambda.size());
    for (int i = 0; i < r; ++i) {
        rho[static_cast<std::size_t>(i)] =
            type_D ? Rational(r - 1 - i) : Rational(2 * (r - i) - 1, 2);
        xi[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    }
    Rational num(1), den(1);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= xi[i] * xi[i] - xi[j] * xi[j];
            den *= rho[i] * rho[i] - rho[j] * rho[j];
        }
    if (!type_D)
        for (int i = 0; i < r; ++i) {
            num *= xi[i];
            den *= rho[i];
        }
    Rational d = num / den;
    if (!exact::is_integer(d) || d <= 0)
        throw std::logic_error("Weyl dimension did not come out a positive integer");
    return exact::numer(d);
}

}  // namespace

Int dim_M(const Weight& sigma, const RankData& rank) {
    if (sigma.role != Role::M) throw std::invalid_argument("dim_M wants an M-weight");
    require_valid(sigma, rank);
    return weyl_dim(rank.parity == Parity::odd, sigma.entries);
}

Int dim_K(const Weight& nu, const RankData& rank) {
    if (nu.role != Role::K) throw std::invalid_argument("dim_K wants a K-weight");
    require_valid(nu, rank);
    return weyl_dim(rank.parity == Parity::even, nu.entries);
}

Int dim_G(const Weight& tau, const RankData& rank) {
    if (tau.role != Role::G) throw std::invalid_argument("dim_G wants a G-weight");
    require_valid(tau, rank);
    return weyl_dim(rank.parity == Parity::odd, tau.entries);
}

Int dim_weight(const Weight& w, const RankData& rank) {
    switch (w.role) {
        case Role::G: return dim_G(w, rank);
        case Role::K: return dim_K(w, rank);
        default: return dim_M(w, rank);
    }
}

exact::RatPoly dim_tau_m_polynomial(const std::vector<Rational>& base, const RankData& rank) {
    Weight w{Role::G, base};
    require_valid(w, rank);
    // dim tau(m) is a product of factors linear in m over the positive roots:
    // with xi_i = tau_i + m + rho_i, each xi_i - xi_j is constant in m and
    // each xi_i + xi_j is 2m + const, so we can assemble the polynomial
    // factor by factor.
    auto rho = rho_values(rank.n, rank.parity);
    const int r = rank.n + 1;
    std::vector<Rational> shift(base);
    for (int i = 0; i < r; ++i) shift[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    exact::RatPoly poly{Rational(1)};
    Rational den(1);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            Rational diff = shift[i] - shift[j];
            exact::RatPoly sum(std::vector<Rational>{shift[i] + shift[j], Rational(2)});
            poly = poly * sum.scaled(diff);
            den *= (rho[i] * rho[i] - rho[j] * rho[j]);
        }
    if (rank.parity == Parity::even)
        for (int i = 0; i < r; ++i) {
            poly = poly * exact::RatPoly(std::vector<Rational>{shift[i], Rational(1)});
            den *= rho[static_cast<std::size_t>(i)];
        }
    return poly.scaled(Rational(1) / den);
}

namespace {

Rational rho_norm_sq(const std::vector<Rational>& rho) {
    Rational s(0);
    for (const auto& r : rho) s += r * r;
    return s;
}

}  // namespace

Rational casimir_M(const Weight& sigma, const RankData& rank) {
    if (sigma.role != Role::M) throw std::invalid_argument("casimir_M wants an M-weight");
    require_valid(sigma, rank);
    auto rho = rho_values(rank.n, rank.parity);
    Rational s(0);
    for (int j = 2; j <= rank.n + 1; ++j) {
        Rational x = sigma.entries[static_cast<std::size_t>(j - 2)] + rho[static_cast<std::size_t>(j - 1)];
        s += x * x;
    }
    return s - rho_norm_sq(rho);
}

Rational casimir_G(const Weight& tau, const RankData& rank) {
    if (tau.role != Role::G) throw std::invalid_argument("casimir_G wants a G-weight");
    require_valid(tau, rank);
    auto rho = rho_values(rank.n, rank.parity);
    Rational s(0);
    for (int j = 1; j <= rank.n + 1; ++j) {
        Rational x = tau.entries[static_cast<std::size_t>(j - 1)] + rho[static_cast<std::size_t>(j - 1)];
        s += x * x;
    }
    return s - rho_norm_sq(rho);
}

Rational casimir_principal(const Weight& sigma, const Rational& lambda, const RankData& rank) {
    return casimir_M(sigma, rank) - lambda * lambda;
}

}  // namespace lie
