#include "characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chars {

using exact::Int;
using exact::Rational;

LaurentPoly LaurentPoly::one(int rank) {
    LaurentPoly p{rank, {}};
    p.terms[Expt(static_cast<std::size_t>(rank), 0)] = 1;
    return p;
}

LaurentPoly LaurentPoly::monomial(const Expt& doubled, const Int& coeff) {
    LaurentPoly p{static_cast<int>(doubled.size()), {}};
    if (coeff != 0) p.terms[doubled] = coeff;
    return p;
}

void LaurentPoly::add_term(const Expt& doubled, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(doubled);
    if (it == terms.end()) {
        terms.emplace(doubled, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r = zero(rank);
    Expt e(static_cast<std::size_t>(rank));
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& s) const {
    if (s == 0) return zero(rank);
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms) c *= s;
    return r;
}

std::pair<Expt, Int> LaurentPoly::leading() const {
    if (terms.empty()) throw std::logic_error("leading term of zero Laurent polynomial");
    auto it = std::prev(terms.end());
    return {it->first, it->second};
}

Expt double_weight(const std::vector<Rational>& w) {
    Expt e;
    e.reserve(w.size());
    for (const auto& x : w) {
        Rational d = x * 2;
        if (!exact::is_integer(d))
            throw std::invalid_argument("weight entry is neither integral nor half-integral");
        e.push_back(exact::numer(d).convert_to<int>());
    }
    return e;
}

std::vector<Rational> halve_expt(const Expt& e) {
    std::vector<Rational> w;
    w.reserve(e.size());
    for (int x : e) w.emplace_back(Rational(x, 2));
    return w;
}

namespace {

int perm_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

LaurentPoly weyl_numerator(SeriesType type, int rank, const std::vector<Rational>& xi) {
    if (static_cast<int>(xi.size()) != rank) throw std::invalid_argument("xi length != rank");
    Expt base = double_weight(xi);
    LaurentPoly out = LaurentPoly::zero(rank);
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    Expt e(static_cast<std::size_t>(rank));
    do {
        int ps = perm_sign(perm);
        for (unsigned mask = 0; mask < (1u << rank); ++mask) {
            int flips = __builtin_popcount(mask);
            if (type == SeriesType::D && flips % 2 == 1) continue;
            // det(w) = sgn(perm) * (-1)^{#flips}; the flip factor is trivial
            // in type D where the flip count is even
            int sign = (flips % 2 == 1) ? -ps : ps;
            for (int i = 0; i < rank; ++i) {
                int v = base[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                e[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -v : v;
            }
            out.add_term(e, sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

std::vector<Rational> chain_rho(SeriesType type, int rank) {
    std::vector<Rational> rho(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        rho[static_cast<std::size_t>(i)] =
            type == SeriesType::D ? Rational(rank - 1 - i) : Rational(2 * (rank - i) - 1, 2);
    return rho;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool dominant_for(SeriesType type, const std::vector<Rational>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Rational next = (type == SeriesType::D && i + 2 == w.size()) ? abs(w[i + 1]) : w[i + 1];
        if (w[i] < next) return false;
    }
    if (type == SeriesType::B && !w.empty() && w.back() < 0) return false;
    return true;
}

}  // namespace

LaurentPoly character(SeriesType type, int rank, const std::vector<Rational>& lambda) {
    auto rho = chain_rho(type, rank);
    LaurentPoly num = weyl_numerator(type, rank, add(lambda, rho));
    LaurentPoly den = weyl_numerator(type, rank, rho);
    // Exact division in lex order.  The lex-leading term of den is x^rho with
    // coefficient 1, so each step cancels the current leading term of num;
    // the leading exponent strictly decreases and the supports stay inside a
    // fixed finite box, which forces termination.
    auto [de, dc] = den.leading();
    LaurentPoly quot = LaurentPoly::zero(rank);
    Expt shift(static_cast<std::size_t>(rank));
    while (!num.is_zero()) {
        auto [ne, nc] = num.leading();
        if (dc != 1 && nc % dc != 0) throw std::logic_error("character division stuck");
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = ne[i] - de[i];
        Int c = dc == 1 ? nc : nc / dc;
        quot.add_term(shift, c);
        num = num - den * LaurentPoly::monomial(shift, c);
    }
    return quot;
}

std::map<std::vector<Rational>, Int> decompose(SeriesType type, int rank, LaurentPoly ch) {
    std::map<std::vector<Rational>, Int> out;
    while (!ch.is_zero()) {
        auto [e, c] = ch.leading();
        auto lambda = halve_expt(e);
        if (!dominant_for(type, lambda))
            throw std::logic_error("lex-leading weight of a character was not dominant");
        ch = ch - character(type, rank, lambda).scaled(c);
        out[lambda] += c;
        if (out[lambda] == 0) out.erase(lambda);
    }
    return out;
}

LaurentPoly restrict_drop_first(const LaurentPoly& p) {
    if (p.rank < 1) throw std::invalid_argument("cannot drop a variable from rank 0");
    LaurentPoly out = LaurentPoly::zero(p.rank - 1);
    for (const auto& [e, c] : p.terms)
        out.add_term(Expt(e.begin() + 1, e.end()), c);
    return out;
}

LaurentPoly exterior_power_std(SeriesType type, int rank, int p) {
    // weights of the standard representation: +-e_i, plus 0 for type B
    std::vector<Expt> wts;
    for (int i = 0; i < rank; ++i) {
        Expt e(static_cast<std::size_t>(rank), 0);
        e[static_cast<std::size_t>(i)] = 2;
        wts.push_back(e);
        e[static_cast<std::size_t>(i)] = -2;
        wts.push_back(e);
    }
    if (type == SeriesType::B) wts.emplace_back(static_cast<std::size_t>(rank), 0);
    const int dim = static_cast<int>(wts.size());
    if (p < 0 || p > dim) return LaurentPoly::zero(rank);
    // elementary symmetric function of the weight monomials
    std::vector<LaurentPoly> E(static_cast<std::size_t>(p) + 1, LaurentPoly::zero(rank));
    E[0] = LaurentPoly::one(rank);
    for (const auto& w : wts) {
        LaurentPoly mono = LaurentPoly::monomial(w);
        for (int k = p; k >= 1; --k)
            E[static_cast<std::size_t>(k)] =
                E[static_cast<std::size_t>(k)] + E[static_cast<std::size_t>(k - 1)] * mono;
    }
    return E[static_cast<std::size_t>(p)];
}

}  // namespace chars
