#include "torsion.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "branching.hpp"
#include "cfunc.hpp"
#include "kostant.hpp"
#include "plancherel.hpp"

namespace torsion {

using exact::Int;
using exact::Rational;
using exact::RatPoly;
using form::Atom;
using form::ClosedForm;
using form::Real50;

namespace {

int l2_degree(int n) { return n * (n + 1) / 2 + 1; }

void require_odd(const lie::RankData& rank, const char* who) {
    if (rank.parity != lie::Parity::odd)
        throw std::domain_error(std::string(who) + ": only the odd-dimensional assembly is exact");
}

lie::Weight base_weight(const std::vector<Rational>& base, const lie::RankData& rank) {
    lie::Weight tau{lie::Role::G, base};
    lie::require_valid(tau, rank);
    return tau;
}

// Smallest twist level from which every shifted weight stays strictly
// dominant in the last coordinate.  Integral bases need last + m >= 1,
// half-integral ones last + m >= 1/2.
int first_twist_level(const std::vector<Rational>& base) {
    const Rational last = base.back();
    const bool integral = exact::denom(base.back()) == 1;
    const Rational floor_val = integral ? Rational(1) : Rational(1, 2);
    int m = 1;
    while (last + m < floor_val) ++m;
    return m;
}

RatPoly lagrange_through(const std::vector<std::pair<Rational, Rational>>& pts) {
    RatPoly total;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        RatPoly term(pts[i].second);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            term *= RatPoly(std::vector<Rational>{-pts[j].first, Rational(1)});
            term = term.scaled(Rational(1) / (pts[i].first - pts[j].first));
        }
        total += term;
    }
    return total;
}

// r(m) = 2 sum_k (-1)^k int_0^{lambda_k} p_hat_{sigma_k}
Rational r_value(const std::vector<Rational>& base, int m, const lie::RankData& rank) {
    const lie::Weight tm = lie::tau_m(base, Rational(m), rank);
    Rational acc(0);
    for (const auto& datum : kostant::kostant_data(tm, rank)) {
        const RatPoly ph = plancherel::plancherel_polynomial(datum.sigma, rank);
        const Rational piece = ph.integrate(Rational(0), datum.lambda);
        acc += (datum.k % 2 == 0) ? piece : -piece;
    }
    return acc * 2;
}

// The per-sigma data in the middle terms only see squares of the last
// entry, so chirality can be dropped.
lie::Weight abs_last(const lie::Weight& sigma) {
    lie::Weight out = sigma;
    if (out.entries.back() < 0) out.entries.back() = -out.entries.back();
    return out;
}

std::string sqrt_plus_offset_digits(const Rational& radicand, const Rational& offset) {
    const Real50 value =
        sqrt(static_cast<Real50>(radicand)) + static_cast<Real50>(offset);
    std::ostringstream os;
    os << std::setprecision(50) << value;
    return os.str();
}

double fit_slope(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(pts.size());
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0) throw std::runtime_error("slope fit: degenerate abscissas");
    return (n * sxy - sx * sy) / den;
}

}  // namespace

Rational c_of_n_rational(int n) {
    if (n < 1) throw std::invalid_argument("c_of_n: n >= 1");
    Int num(1);
    for (int i = 0; i < n * (n + 1) / 2; ++i) num *= 2;
    for (int i = 2; i <= n; ++i) num *= i;
    Int den(2);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) den *= (i + j);
    Rational q(num, den);
    return (n % 2 == 0) ? -q : q;
}

ClosedForm c_of_n(int n) {
    return form::single(form::pi_atom(-n), c_of_n_rational(n));
}

RatPoly l2_polynomial(const std::vector<Rational>& base, const lie::RankData& rank) {
    require_odd(rank, "l2_polynomial");
    base_weight(base, rank);
    const int degree = l2_degree(rank.n);
    const int start = first_twist_level(base);

    std::vector<std::pair<Rational, Rational>> pts;
    for (int m = start; m < start + degree + 1; ++m)
        pts.emplace_back(Rational(m), r_value(base, m, rank));
    const RatPoly poly = lagrange_through(pts);

    const int probe = start + degree + 1;
    if (poly(Rational(probe)) != r_value(base, probe, rank))
        throw std::logic_error("l2_polynomial: interpolation does not close");
    return poly;
}

Rational calibrate_cn(int n, const std::vector<Rational>& base) {
    const lie::RankData rank{n, lie::Parity::odd};
    const RatPoly r = l2_polynomial(base, rank);
    const RatPoly d = lie::dim_tau_m_polynomial(base, rank);
    if (r.degree() != l2_degree(n) || d.degree() + 1 != l2_degree(n))
        throw std::runtime_error("calibrate_cn: degenerate leading behaviour");
    // Leading coefficient of m * dim(m) equals that of dim(m).  The leading
    // asymptotic constant enters through its absolute value: the normalization
    // being solved for is positive, while the literal alternating-sign product
    // formula goes negative at even n.  Only |.|-agreement is asserted between
    // the two; see c_of_n.
    const Rational magnitude = abs(c_of_n_rational(n));
    return -magnitude * d.leading() / r.leading();
}

ClosedForm l2_closed_form(const std::vector<Rational>& base, int m,
                          const lie::RankData& rank) {
    require_odd(rank, "l2_closed_form");
    if (m < 1) throw std::invalid_argument("l2_closed_form: m >= 1");
    const Atom scale =
        form::atom_product(form::atom_product(form::pi_atom(1), form::cn_atom()),
                           form::vol_atom());
    return form::single(scale, r_value(base, m, rank));
}

ClosedForm MI_term(const std::vector<Rational>& base, int m, const lie::RankData& rank) {
    return l2_closed_form(base, m, rank).scaled(Rational(2));
}

ClosedForm MT_term(const std::vector<Rational>& base, int m, const lie::RankData& rank) {
    require_odd(rank, "MT_term");
    if (m < 1) throw std::invalid_argument("MT_term: m >= 1");
    const lie::Weight tm = lie::tau_m(base, Rational(m), rank);
    Rational s(0);
    for (const auto& datum : kostant::kostant_data(tm, rank)) {
        const Rational piece = Rational(lie::dim_M(datum.sigma, rank)) * datum.lambda;
        s += (datum.k % 2 == 1) ? piece : -piece;
    }
    return form::single(form::cgamma_atom(), -s);
}

ClosedForm MIcal_term(const std::vector<Rational>& base, int m,
                      const lie::RankData& rank) {
    require_odd(rank, "MIcal_term");
    if (m < 1) throw std::invalid_argument("MIcal_term: m >= 1");
    const lie::Weight tm = lie::tau_m(base, Rational(m), rank);
    const auto rho = lie::rho_values(rank.n, rank.parity);
    ClosedForm total;
    for (const auto& datum : kostant::kostant_data(tm, rank)) {
        const lie::Weight sigma = abs_last(datum.sigma);
        if (sigma.entries.back() < m)
            throw std::domain_error(
                "MIcal_term: twist level exceeds the smallest weight entry");
        const Rational dim{lie::dim_M(sigma, rank)};
        const Rational lam = datum.lambda;
        const Rational sign((datum.k % 2 == 1) ? 1 : -1);

        ClosedForm val;
        val.add(form::atom_product(form::kappa_atom(), form::log_gamma_atom(m + lam)),
                dim * 2);
        val.add(form::atom_product(form::kappa_atom(), form::euler_gamma_atom()),
                dim * lam * 2);
        val.add(form::atom_product(form::kappa_atom(), form::cpsi_atom()), dim * 2);

        for (int i = 0; i < rank.n; ++i) {
            const Rational xi = sigma.entries[i] + rho[i + 1];
            const RatPoly pj = plancherel::p_j(sigma, i + 2, rank);
            for (Rational l(m); l < xi; l += 1) {
                val.add(form::atom_product(form::kappa_atom(), form::log_atom(l + lam)),
                        plancherel::eval_at_il(pj, l) * 2);
                const RatPoly q = plancherel::q_jl(sigma, i + 2, l, rank);
                val.add(form::kappa_atom(),
                        q.at_imaginary_argument().integrate(Rational(0), lam));
            }
            val.add(form::atom_product(form::kappa_atom(), form::log_atom(xi + lam)), dim);
            const RatPoly qb = plancherel::q_jl(sigma, i + 2, xi, rank);
            val.add(form::kappa_atom(),
                    qb.at_imaginary_argument().integrate(Rational(0), lam) / 2);
        }
        total += val.scaled(sign);
    }
    return total;
}

ClosedForm MJ_term(const std::vector<Rational>& base, int m, const lie::RankData& rank) {
    require_odd(rank, "MJ_term");
    if (m < 1) throw std::invalid_argument("MJ_term: m >= 1");
    const lie::Weight tm = lie::tau_m(base, Rational(m), rank);
    ClosedForm total;
    for (const auto& datum : kostant::kostant_data(tm, rank)) {
        if (datum.sigma.entries.back() < m)
            throw std::domain_error(
                "MJ_term: twist level exceeds the smallest weight entry");
        const Rational shifted_casimir =
            datum.lambda * datum.lambda + lie::casimir_M(datum.sigma, rank);
        const Rational sign((datum.k % 2 == 1) ? 1 : -1);

        // sigma support: every M-type under every K-type of the iota table
        std::set<lie::Weight> support;
        const auto table = branching::nu_of_sigma(datum.sigma, rank);
        for (const auto& [nu, mult] : table.entries) {
            if (mult == 0) continue;
            for (const auto& s : branching::branch_K_to_M(nu, rank)) support.insert(s);
        }

        for (const auto& sigma : support) {
            const auto poles =
                cfunc::f_km(sigma, base, m, datum.k, rank).consolidated();
            if (poles.empty()) continue;
            const Rational dim{lie::dim_M(sigma, rank)};
            const Rational radicand = shifted_casimir - lie::casimir_M(sigma, rank);
            if (!(radicand > 0))
                throw std::logic_error("MJ_term: nonpositive square root argument");
            const auto root = exact::exact_sqrt(radicand);
            for (const auto& [loc, weight] : poles) {
                if (loc == 0) continue;
                const Rational aloc = loc > 0 ? loc : -loc;
                const int direction = loc > 0 ? 1 : -1;
                const Rational coeff =
                    sign * Rational(-1, 2) * dim * Rational(weight) * direction;
                const Atom log_factor =
                    root ? form::log_atom(*root + aloc)
                         : form::approx_log_atom(sqrt_plus_offset_digits(radicand, aloc));
                total.add(form::atom_product(form::kappa_atom(), log_factor), coeff);
            }
        }
    }
    return total;
}

form::NumericContext make_context(const lie::RankData& rank, const GeometryInput& geom) {
    require_odd(rank, "make_context");
    form::NumericContext ctx;
    ctx.vol = Real50(geom.vol);
    ctx.kappa = Real50(geom.kappa);
    ctx.cgamma = Real50(geom.c_gamma);
    const std::vector<Rational> ones(static_cast<std::size_t>(rank.n) + 1, Rational(1));
    ctx.cn = static_cast<Real50>(calibrate_cn(rank.n, ones)) *
             pow(boost::math::constants::pi<Real50>(), -(rank.n + 1));
    return ctx;
}

std::pair<ClosedForm, Real50> nonhyperbolic_log_torsion(
    const std::vector<Rational>& base, int m, const lie::RankData& rank,
    const GeometryInput& geom) {
    ClosedForm sum = MI_term(base, m, rank);
    sum += MT_term(base, m, rank);
    sum += MIcal_term(base, m, rank);
    sum += MJ_term(base, m, rank);
    const ClosedForm half = sum.scaled(Rational(1, 2));
    return {half, make_context(rank, geom).evaluate(half)};
}

TermReport term_report(const std::vector<Rational>& base, int m,
                       const lie::RankData& rank, const GeometryInput& geom) {
    TermReport rep;
    rep.mi = MI_term(base, m, rank);
    rep.mt = MT_term(base, m, rank);
    rep.mical = MIcal_term(base, m, rank);
    rep.mj = MJ_term(base, m, rank);
    rep.total = (rep.mi + rep.mt + rep.mical + rep.mj).scaled(Rational(1, 2));

    const form::NumericContext ctx = make_context(rank, geom);
    rep.numeric_mi = ctx.evaluate(rep.mi);
    rep.numeric_mt = ctx.evaluate(rep.mt);
    rep.numeric_mical = ctx.evaluate(rep.mical);
    rep.numeric_mj = ctx.evaluate(rep.mj);
    rep.numeric_total = ctx.evaluate(rep.total);
    rep.numeric_l2 = ctx.evaluate(l2_closed_form(base, m, rank));
    rep.residual = abs(rep.numeric_total - rep.numeric_l2);
    return rep;
}

SweepResult asymptotic_sweep(const std::vector<Rational>& base, int m_begin, int m_end,
                             int step, const lie::RankData& rank,
                             const GeometryInput& geom) {
    require_odd(rank, "asymptotic_sweep");
    if (m_begin < 1 || m_end < m_begin || step < 1)
        throw std::invalid_argument("asymptotic_sweep: bad m range");

    const form::NumericContext ctx = make_context(rank, geom);
    const RatPoly l2_poly = l2_polynomial(base, rank);
    const Atom l2_scale =
        form::atom_product(form::atom_product(form::pi_atom(1), form::cn_atom()),
                           form::vol_atom());
    const Real50 l2_unit = ctx.evaluate_atom(l2_scale);

    SweepResult result;
    for (int m = m_begin; m <= m_end; m += step) {
        SweepRow row;
        row.m = m;
        row.l2 = static_cast<Real50>(l2_poly(Rational(m))) * l2_unit;
        row.mt = ctx.evaluate(MT_term(base, m, rank));
        row.mical = ctx.evaluate(MIcal_term(base, m, rank));
        row.mj = ctx.evaluate(MJ_term(base, m, rank));
        // MI/2 = l2, so the residual of total - l2 is half the tail sum
        row.residual = abs((row.mt + row.mical + row.mj) / 2);
        result.rows.push_back(row);
    }
    if (result.rows.size() < 8)
        throw std::invalid_argument("asymptotic_sweep: need at least 8 samples");

    std::vector<std::pair<double, double>> res_pts, l2_pts;
    for (std::size_t i = result.rows.size() / 2; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        const double lm = std::log(static_cast<double>(row.m));
        if (row.residual > 0)
            res_pts.emplace_back(lm, static_cast<double>(log(row.residual)));
        if (row.l2 != 0)
            l2_pts.emplace_back(lm, static_cast<double>(log(abs(row.l2))));
    }
    if (res_pts.size() < 4 || l2_pts.size() < 4)
        throw std::runtime_error("asymptotic_sweep: too few usable points for slope fits");
    result.residual_slope = fit_slope(res_pts);
    result.l2_slope = fit_slope(l2_pts);
    return result;
}

}  // namespace torsion
