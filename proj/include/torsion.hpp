#pragma once

#include <utility>
#include <vector>

#include "closed_form.hpp"
#include "liedata.hpp"
#include "ratpoly.hpp"

namespace torsion {

// Geometry of the quotient that the formulas consume: the volume, the number
// of cusps, and the constant term C_Gamma of the Epstein-type zeta function.
// The length spectrum is deliberately not part of this input; see H_series.
struct GeometryInput {
    double vol = 1.0;
    int kappa = 0;
    double c_gamma = 0.0;
};

// One closed geodesic class: total length, primitive length, and the n
// holonomy rotation angles of its M-part.
struct GeodesicRecord {
    double length = 0.0;
    double primitive_length = 0.0;
    std::vector<double> angles;
};

// Literal constant of the leading L2-torsion asymptotics, as rational times
// pi^{-n}.  The n=2 value is negative; see calibrate_cn for the comparison
// the engine reports instead of resolving the sign.
form::ClosedForm c_of_n(int n);
exact::Rational c_of_n_rational(int n);  // q with C(n) = q * pi^{-n}

// Rational q such that the Plancherel normalization constant is
// c_n = q * pi^{-(n+1)}, obtained by matching the leading coefficient of the
// L2 polynomial against -C(n) times the leading coefficient of m * dim(m).
// Independent of the base weight; requires base_{n+1} >= 1.
exact::Rational calibrate_cn(int n, const std::vector<exact::Rational>& base);

// r with log T^{(2)} = r(m) * pi * c_n * vol; exact degree n(n+1)/2 + 1.
exact::RatPoly l2_polynomial(const std::vector<exact::Rational>& base,
                             const lie::RankData& rank);

// Per-term Mellin values at a fixed twist level m, as exact closed forms.
// Geometry stays symbolic: Vol, Kappa and CGamma atoms.
form::ClosedForm l2_closed_form(const std::vector<exact::Rational>& base, int m,
                                const lie::RankData& rank);
form::ClosedForm MI_term(const std::vector<exact::Rational>& base, int m,
                         const lie::RankData& rank);
form::ClosedForm MT_term(const std::vector<exact::Rational>& base, int m,
                         const lie::RankData& rank);
form::ClosedForm MIcal_term(const std::vector<exact::Rational>& base, int m,
                            const lie::RankData& rank);
form::ClosedForm MJ_term(const std::vector<exact::Rational>& base, int m,
                         const lie::RankData& rank);

// Numeric evaluation context with the calibrated c_n value filled in.
form::NumericContext make_context(const lie::RankData& rank, const GeometryInput& geom);

// (MI + MT + MIcal + MJ) / 2.  The hyperbolic term MH needs a length
// spectrum and is excluded; callers add H-series data separately.
std::pair<form::ClosedForm, form::Real50> nonhyperbolic_log_torsion(
    const std::vector<exact::Rational>& base, int m, const lie::RankData& rank,
    const GeometryInput& geom);

struct TermReport {
    form::ClosedForm mi, mt, mical, mj, total;
    form::Real50 numeric_mi{0}, numeric_mt{0}, numeric_mical{0}, numeric_mj{0};
    form::Real50 numeric_total{0}, numeric_l2{0};
    form::Real50 residual{0};  // |total - l2|
};
TermReport term_report(const std::vector<exact::Rational>& base, int m,
                       const lie::RankData& rank, const GeometryInput& geom);

struct SweepRow {
    int m = 0;
    form::Real50 l2{0}, mt{0}, mical{0}, mj{0}, residual{0};
};
struct SweepResult {
    std::vector<SweepRow> rows;
    double residual_slope = 0.0;  // log|residual| vs log m, top half of range
    double l2_slope = 0.0;
};
// Requires at least 8 sampled m values for the slope fits.
SweepResult asymptotic_sweep(const std::vector<exact::Rational>& base, int m_begin,
                             int m_end, int step, const lie::RankData& rank,
                             const GeometryInput& geom);

// Symmetrized geodesic weight L(gamma;sigma) + L(gamma;w0 sigma) with
// L = conj(Tr sigma(m_gamma)) e^{-n l} / det(Id - Ad(m_gamma a_gamma)).
// Degenerate angle configurations are perturbed by 1e-8 with a warning
// unless sigma is trivial, where the limit is exact.
double hyperbolic_weight(const GeodesicRecord& rec, const lie::Weight& sigma,
                         const lie::RankData& rank);

// Truncated hyperbolic heat contribution over the supplied geodesic table.
double H_series(double t, const std::vector<exact::Rational>& base, int m,
                const std::vector<GeodesicRecord>& table, const lie::RankData& rank);

struct PhiEvenConfig {
    double epsilon = 1e-3;   // contour half-circle radius
    double quad_tol = 1e-12;
    int max_depth = 12;
};
// Even d: the cusp-universal function Phi with log T = kappa(X) Phi(lambda),
// computed by contour quadrature of the c-function log-derivative and the
// numeric Mellin finite part.  Desk scale n <= 2.
double phi_even(const lie::Weight& lambda_weight, const lie::RankData& rank,
                const PhiEvenConfig& cfg = {});

}  // namespace torsion
