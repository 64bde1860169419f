#include "mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mellin {

form::ClosedForm mellin_poly_gaussian(const exact::RatPoly& P, const exact::Rational& c) {
    if (!P.is_even()) {
        throw std::invalid_argument("mellin_poly_gaussian: polynomial must be even");
    }
    if (c <= 0) throw std::invalid_argument("mellin_poly_gaussian: c must be positive");
    const exact::Rational area = P.antiderivative()(c);
    return form::single(form::pi_atom(1), -2 * area);
}

form::ClosedForm mellin_pole_term(const exact::Rational& c, const exact::Rational& j) {
    if (c <= 0) throw std::invalid_argument("mellin_pole_term: c must be positive");
    if (j < 0) throw std::invalid_argument("mellin_pole_term: j must be nonnegative");
    return form::single(form::log_atom(c + j), -2);
}

form::ClosedForm mellin_pole_term_approx(const std::string& argument_digits) {
    return form::single(form::approx_log_atom(argument_digits), -2);
}

form::ClosedForm mellin_digamma(const exact::Rational& c) {
    if (c <= 0) throw std::invalid_argument("mellin_digamma: c must be positive");
    form::ClosedForm out;
    out.add(form::log_gamma_atom(1 + c), -2);
    out.add(form::cpsi_atom(), 1);
    return out;
}

double numeric_mellin_finite_part(const std::function<double(double)>& f,
                                  const std::vector<SmallTTerm>& ladder,
                                  const QuadratureConfig& cfg) {
    if (ladder.empty()) throw std::invalid_argument("mellin fit: empty ladder");
    {
        std::set<std::pair<double, bool>> seen;
        for (const auto& term : ladder) {
            if (term.exponent == 0.0 && term.with_log) {
                throw std::invalid_argument("mellin fit: t^0 log t not admissible");
            }
            if (!seen.insert({term.exponent, term.with_log}).second) {
                throw std::invalid_argument("mellin fit: duplicate ladder term");
            }
        }
    }
    const int rows = cfg.fit_points;
    const int cols = static_cast<int>(ladder.size());
    if (rows < 2 * cols) throw std::invalid_argument("mellin fit: too few sample points");
    if (!(cfg.fit_low > 0 && cfg.fit_low < cfg.fit_high && cfg.fit_high < 1)) {
        throw std::invalid_argument("mellin fit: bad window");
    }

    // The content formulas amplify the most singular coefficient by
    // delta^a/a, so the fit is solved in extended precision and reweighted
    // once by the model's magnitude envelope: that equalizes the relative
    // misfit per row even where cancellation drives |y| through zero.
    using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    MatL A(rows, cols);
    VecL y(rows);
    const double ratio = cfg.fit_high / cfg.fit_low;
    for (int i = 0; i < rows; ++i) {
        const double t = cfg.fit_low * std::pow(ratio, double(i) / (rows - 1));
        const long double lt = std::log(static_cast<long double>(t));
        y(i) = f(t);
        for (int k = 0; k < cols; ++k) {
            A(i, k) = std::exp(static_cast<long double>(ladder[k].exponent) * lt) *
                      (ladder[k].with_log ? lt : 1.0L);
        }
    }

    const long double y_scale = y.cwiseAbs().maxCoeff();
    if (y_scale == 0.0L) return 0.0;

    // Magnitude of each term's continued content at the base split point.
    // The solve below runs in these units so that the minimum-norm
    // completion of window-invisible directions carries no continued
    // content, instead of surfacing as large oscillating coefficients that
    // poison the content and any evaluation beyond the window.
    VecL content_impact(cols);
    {
        const long double d = cfg.fit_high;
        const long double ld = std::log(d);
        for (int k = 0; k < cols; ++k) {
            const long double e = ladder[k].exponent;
            if (ladder[k].with_log) {
                content_impact(k) = std::abs(std::pow(d, e) * (ld / e - 1.0L / (e * e)));
            } else if (e == 0.0L) {
                content_impact(k) = boost::math::constants::euler<long double>() + std::abs(ld);
            } else {
                content_impact(k) = std::abs(std::pow(d, e) / e);
            }
        }
    }

    const auto solve_weighted = [&](const VecL& w, long double* residual_out) {
        MatL As(rows, cols);
        VecL ys = (w.asDiagonal() * y).eval();
        VecL col_scale(cols);
        for (int k = 0; k < cols; ++k) {
            As.col(k) = (w.asDiagonal() * A.col(k)) / content_impact(k);
            col_scale(k) = As.col(k).cwiseAbs().maxCoeff();
            if (col_scale(k) == 0.0L) col_scale(k) = 1.0L;
            As.col(k) /= col_scale(k);
        }
        Eigen::JacobiSVD<MatL> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(static_cast<long double>(1e-13));
        const VecL z = svd.solve(ys);
        if (residual_out) *residual_out = (As * z - ys).cwiseAbs().maxCoeff();
        VecL x(cols);
        for (int k = 0; k < cols; ++k) x(k) = z(k) / (col_scale(k) * content_impact(k));
        return x;
    };

    VecL w(rows);
    for (int i = 0; i < rows; ++i) w(i) = 1.0L / (std::abs(y(i)) + 1e-6L * y_scale);
    const VecL x0 = solve_weighted(w, nullptr);

    // The envelope never vanishes, so the guard only prevents division by
    // zero; any real floor would crush the rows where the envelope is
    // smallest, exactly the ones that pin the least singular terms.
    VecL envelope = (A.cwiseAbs() * x0.cwiseAbs()).eval();
    const long double env_scale = envelope.maxCoeff();
    if (env_scale > 0.0L) {
        for (int i = 0; i < rows; ++i) {
            w(i) = 1.0L / (envelope(i) + 1e-300L * env_scale);
        }
    }
    long double residual = 0.0L;
    const VecL xl = solve_weighted(w, &residual);
    if (!(residual <= static_cast<long double>(cfg.fit_residual_tol))) {
        std::ostringstream msg;
        msg << "mellin fit: small-t expansion residual " << static_cast<double>(residual)
            << " exceeds tolerance " << cfg.fit_residual_tol;
        throw std::runtime_error(msg.str());
    }
    const Eigen::VectorXd x = xl.cast<double>();

    // Exact Mellin content of the fitted expansion over (0, delta]:
    //   t^a:        a > 0 -> a_k delta^a / a;  a = 0 -> gamma a_0 + a_0 log delta
    //   t^b log t:  b > 0 -> b_l delta^b (log delta / b - 1 / b^2)
    // A term with a < 0 is skipped here: its analytically continued content
    // delta^a/a cancels its own convergent tail integral exactly, so the
    // fitted singular part is subtracted inside the tail integrand instead.
    // That keeps every numeric piece at the scale of the answer rather than
    // at the delta^a scale of the divergence.

    // Coefficient error still enters the content as delta^a/a, and the fit
    // cannot beat the window's exponent aliasing.  The split point is
    // therefore pushed beyond the window while the model demonstrably tracks
    // f at noise level; every doubling shrinks that amplification by
    // 2^|a_min|.  Where the ladder stops matching (large decay parameter)
    // the probe stops the push.
    double delta = cfg.fit_high;
    {
        const auto model = [&](double t) {
            const double lt = std::log(t);
            double m = 0.0, env = 0.0;
            for (int k = 0; k < cols; ++k) {
                const double term = x(k) * std::exp(ladder[k].exponent * lt) *
                                    (ladder[k].with_log ? lt : 1.0);
                m += term;
                env += std::abs(term);
            }
            return std::pair{m, env};
        };
        // Loose enough to admit the fit's own coefficient noise, tight
        // enough to catch ladder truncation, which grows by ~2^10 per level.
        const auto tracks = [&](double t) {
            const auto [m, env] = model(t);
            return std::abs(f(t) - m) <= 3e-11 * env;
        };
        for (double cand = 2.0 * delta; cand <= 0.32; cand *= 2.0) {
            if (!tracks(0.75 * cand) || !tracks(cand)) break;
            delta = cand;
        }
    }
    const double log_delta = std::log(delta);
    double value = 0.0;
    std::vector<int> singular;
    for (int k = 0; k < cols; ++k) {
        const double a = x(k);
        const double e = ladder[k].exponent;
        if (e < 0.0) {
            singular.push_back(k);
            continue;
        }
        if (!ladder[k].with_log) {
            if (e == 0.0) {
                value += a * (boost::math::constants::euler<double>() + log_delta);
            } else {
                value += a * std::pow(delta, e) / e;
            }
        } else {
            value += a * std::pow(delta, e) * (log_delta / e - 1.0 / (e * e));
        }
    }

    // Tail in the log variable, where both the integrand and the subtracted
    // singular powers decay exponentially.
    const auto tail_integrand = [&](double u) {
        double g = f(std::exp(u));
        for (int k : singular) {
            const double p = std::exp(ladder[k].exponent * u);
            if (p == 0.0) continue;
            g -= x(static_cast<Eigen::Index>(k)) * p * (ladder[k].with_log ? u : 1.0);
        }
        return g;
    };
    using quad = boost::math::quadrature::gauss_kronrod<double, 31>;
    const double tail = quad::integrate(tail_integrand, log_delta,
                                        std::numeric_limits<double>::infinity(),
                                        cfg.max_depth, cfg.rel_tol);
    return value + tail;
}

std::vector<SmallTTerm> gaussian_ladder(int degree) {
    if (degree < 0) throw std::invalid_argument("gaussian_ladder: negative degree");
    std::vector<SmallTTerm> out;
    for (int twice = -(degree + 1); twice <= 13; twice += 2) {
        out.push_back({twice / 2.0, false});
    }
    return out;
}

std::vector<SmallTTerm> resolvent_ladder() {
    std::vector<SmallTTerm> out;
    for (int twice = 0; twice <= 13; ++twice) out.push_back({twice / 2.0, false});
    return out;
}

std::vector<SmallTTerm> digamma_ladder() {
    std::vector<SmallTTerm> out;
    for (int twice = -1; twice <= 13; ++twice) {
        out.push_back({twice / 2.0, false});
        if (twice % 2 != 0) out.push_back({twice / 2.0, true});
    }
    return out;
}

std::vector<SmallTTerm> heat_ladder() { return digamma_ladder(); }

}  // namespace mellin
