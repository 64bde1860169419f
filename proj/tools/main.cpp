#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "CLI11.hpp"

#include "branching.hpp"
#include "cfunc.hpp"
#include "kostant.hpp"
#include "liedata.hpp"
#include "mellin.hpp"
#include "plancherel.hpp"
#include "serialize.hpp"
#include "special.hpp"
#include "torsion.hpp"

namespace {

using exact::Rational;
using nlohmann::json;

lie::Parity parse_parity(const std::string& s) {
    if (s == "odd") return lie::Parity::odd;
    if (s == "even") return lie::Parity::even;
    throw std::invalid_argument("parity must be odd or even");
}

lie::Role parse_role(const std::string& s) {
    if (s == "G") return lie::Role::G;
    if (s == "K") return lie::Role::K;
    if (s == "M") return lie::Role::M;
    throw std::invalid_argument("role must be G, K or M");
}

const char* parity_name(lie::Parity p) { return p == lie::Parity::odd ? "odd" : "even"; }

int resolve_precision(const CLI::App& app, int flag_value) {
    if (app.count("--precision") > 0) return flag_value;
    const char* env = std::getenv("TORSION_PRECISION");
    if (!env) return 16;
    int v = 0;
    try {
        v = std::stoi(env);
    } catch (const std::exception&) {
        throw std::invalid_argument("TORSION_PRECISION must be an integer");
    }
    if (v < 16) throw std::invalid_argument("TORSION_PRECISION must be at least 16");
    return v;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Reference integrands for the mellin-check diagnostic: the spectral-side
// heat integrals whose Mellin values are known in closed form.
double pole_reference(double t, double c, int j) {
    const double gauss = std::exp(-t * c * c);
    if (j == 0) return gauss;
    auto g = [&](double lam) {
        return std::exp(-t * lam * lam) / (lam * lam + static_cast<double>(j) * j);
    };
    const double half = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, 0.0, std::numeric_limits<double>::infinity(), 12, 1e-13);
    return gauss * (j / boost::math::constants::pi<double>()) * 2.0 * half;
}

double digamma_reference(double t, double c) {
    auto g = [&](double lam) {
        return std::exp(-t * lam * lam) *
               special::digamma(std::complex<double>(1.0, lam)).real();
    };
    const double half = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, 0.0, std::numeric_limits<double>::infinity(), 12, 1e-13);
    return std::exp(-t * c * c) * 2.0 * half / boost::math::constants::pi<double>();
}

struct GeometryFlags {
    double vol = 1.0;
    int kappa = 0;
    double cgamma = 0.0;

    torsion::GeometryInput input() const { return {vol, kappa, cgamma}; }
};

void add_geometry_flags(CLI::App* cmd, GeometryFlags& g) {
    cmd->add_option("--vol", g.vol, "hyperbolic volume of the quotient");
    cmd->add_option("--kappa", g.kappa, "number of cusps");
    cmd->add_option("--cgamma", g.cgamma, "lattice constant C_Gamma");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact special-function engine for analytic torsion of "
                 "finite-volume hyperbolic quotients"};
    app.require_subcommand(1);

    int precision = 16;
    app.add_option("--precision", precision,
                   "significant digits for numeric output (>= 16)")
        ->check(CLI::Range(16, 50));

    // ---- shared option storage -------------------------------------------
    int n = 1;
    std::string parity_str = "odd";
    std::string role_str = "M";
    std::string weight_str, base_str, sigma_str, nu_str;
    std::string mode = "both";
    std::string format = "json";

    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of a highest weight");
    dim_cmd->add_option("--n", n, "rank parameter")->required();
    dim_cmd->add_option("--parity", parity_str, "odd|even");
    dim_cmd->add_option("--role", role_str, "G|K|M")->required();
    dim_cmd->add_option("--weight", weight_str, "comma-separated entries")->required();

    auto* cas_cmd = app.add_subcommand("casimir", "Casimir eigenvalue of a highest weight");
    cas_cmd->add_option("--n", n)->required();
    cas_cmd->add_option("--parity", parity_str);
    cas_cmd->add_option("--role", role_str, "G|M");
    cas_cmd->add_option("--weight", weight_str)->required();

    auto* kos_cmd = app.add_subcommand(
        "kostant", "level decomposition of a G-weight into (lambda, sigma) strata");
    kos_cmd->add_option("--n", n)->required();
    kos_cmd->add_option("--weight", weight_str)->required();

    auto* br_cmd = app.add_subcommand(
        "branch", "restriction K|M (role K) or its signed inverse table (role M)");
    br_cmd->add_option("--n", n)->required();
    br_cmd->add_option("--parity", parity_str);
    br_cmd->add_option("--role", role_str)->required();
    br_cmd->add_option("--weight", weight_str)->required();

    std::string lambda_str;
    auto* pl_cmd = app.add_subcommand("plancherel", "Plancherel density data for an M-weight");
    pl_cmd->add_option("--n", n)->required();
    pl_cmd->add_option("--sigma", sigma_str)->required();
    auto* pl_lambda = pl_cmd->add_option("--lambda", lambda_str, "rational evaluation point");

    double omega_lambda = 1.0;
    auto* om_cmd = app.add_subcommand(
        "omega", "cusp distribution decomposition: digamma block, poles, polynomial");
    om_cmd->add_option("--n", n)->required();
    om_cmd->add_option("--sigma", sigma_str)->required();
    om_cmd->add_option("--lambda", omega_lambda, "numeric evaluation point");

    int m_level = 1, k_level = 0;
    double z_re = 1.0, z_im = 0.0;
    auto* cf_cmd = app.add_subcommand(
        "cfun", "intertwining c-function log-derivative (pole list or even-d values)");
    cf_cmd->add_option("--n", n)->required();
    cf_cmd->add_option("--parity", parity_str);
    cf_cmd->add_option("--sigma", sigma_str)->required();
    auto* cf_nu = cf_cmd->add_option("--nu", nu_str);
    auto* cf_base = cf_cmd->add_option("--base", base_str, "G-weight for the truncated merge");
    cf_cmd->add_option("--m", m_level, "twist level for the truncated merge");
    cf_cmd->add_option("--k", k_level, "stratum level for the truncated merge");
    cf_cmd->add_option("--z-real", z_re, "even-d evaluation point, real part");
    cf_cmd->add_option("--z-imag", z_im, "even-d evaluation point, imaginary part");

    std::string check_case = "pole";
    double check_c = 1.0, check_c2 = 1.0, check_tol = 1e-6;
    int check_j = 0;
    auto* mc_cmd = app.add_subcommand(
        "mellin-check", "numeric Mellin finite part against a closed-form reference");
    mc_cmd->add_option("--case", check_case, "pole|digamma")
        ->check(CLI::IsMember({"pole", "digamma"}));
    mc_cmd->add_option("--c", check_c, "Gaussian offset, > 0")->required();
    mc_cmd->add_option("--j", check_j, "pole offset, >= 0");
    mc_cmd->add_option("--c2", check_c2, "second offset for the digamma difference");
    mc_cmd->add_option("--tol", check_tol, "relative tolerance before failing");

    GeometryFlags geom;
    auto* l2_cmd = app.add_subcommand("l2", "L2 torsion value at a twist level");
    l2_cmd->add_option("--n", n)->required();
    l2_cmd->add_option("--base", base_str)->required();
    l2_cmd->add_option("--m", m_level)->required();
    l2_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "numeric", "both"}));
    add_geometry_flags(l2_cmd, geom);

    auto* tm_cmd = app.add_subcommand(
        "terms", "all non-hyperbolic Mellin terms at a twist level");
    tm_cmd->add_option("--n", n)->required();
    tm_cmd->add_option("--base", base_str)->required();
    tm_cmd->add_option("--m", m_level)->required();
    tm_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "numeric", "both"}));
    add_geometry_flags(tm_cmd, geom);

    int m_begin = 10, m_end = 100, m_step = 10;
    auto* sw_cmd = app.add_subcommand("sweep", "twist-level sweep with asymptotic slopes");
    sw_cmd->add_option("--n", n)->required();
    sw_cmd->add_option("--base", base_str)->required();
    sw_cmd->add_option("--m-begin", m_begin)->required();
    sw_cmd->add_option("--m-end", m_end)->required();
    sw_cmd->add_option("--step", m_step);
    sw_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    add_geometry_flags(sw_cmd, geom);

    std::string table_path;
    double heat_t = 1.0;
    auto* hy_cmd = app.add_subcommand(
        "hyperbolic", "truncated geodesic heat series over a length table");
    hy_cmd->add_option("--n", n)->required();
    hy_cmd->add_option("--base", base_str)->required();
    hy_cmd->add_option("--m", m_level)->required();
    hy_cmd->add_option("--t", heat_t, "heat time, > 0")->required();
    hy_cmd->add_option("--table", table_path, "geodesic CSV path")->required();

    torsion::PhiEvenConfig phi_cfg;
    auto* ph_cmd = app.add_subcommand(
        "phi-even", "cusp-universal Phi function of an even-dimensional quotient");
    ph_cmd->add_option("--n", n)->required();
    ph_cmd->add_option("--weight", weight_str)->required();
    ph_cmd->add_option("--epsilon", phi_cfg.epsilon, "contour radius");
    ph_cmd->add_option("--tol", phi_cfg.quad_tol, "contour quadrature tolerance");

    auto* cal_cmd = app.add_subcommand(
        "calibrate", "Plancherel normalization against the literal asymptotic constant");
    cal_cmd->add_option("--n", n)->required();
    auto* cal_base = cal_cmd->add_option("--base", base_str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const int digits = resolve_precision(app, precision);
        const lie::Parity parity = parse_parity(parity_str);

        if (*dim_cmd) {
            const lie::RankData rank{n, parity};
            const lie::Role role = parse_role(role_str);
            const lie::Weight w{role, serialize::parse_weight_list(weight_str)};
            lie::require_valid(w, rank);
            exact::Int d;
            switch (role) {
                case lie::Role::G: d = lie::dim_G(w, rank); break;
                case lie::Role::K: d = lie::dim_K(w, rank); break;
                case lie::Role::M: d = lie::dim_M(w, rank); break;
            }
            json out;
            out["rank"] = n;
            out["parity"] = parity_name(parity);
            out["role"] = role_str;
            out["weight"] = serialize::weight_json(w);
            out["dimension"] = d.str();
            emit(out);
        } else if (*cas_cmd) {
            const lie::RankData rank{n, parity};
            const lie::Role role = parse_role(role_str);
            const lie::Weight w{role, serialize::parse_weight_list(weight_str)};
            lie::require_valid(w, rank);
            Rational value;
            if (role == lie::Role::M)
                value = lie::casimir_M(w, rank);
            else if (role == lie::Role::G)
                value = lie::casimir_G(w, rank);
            else
                throw std::invalid_argument("casimir: role must be G or M");
            json out;
            out["rank"] = n;
            out["parity"] = parity_name(parity);
            out["role"] = role_str;
            out["weight"] = serialize::weight_json(w);
            out["casimir"] = serialize::rational_json(value);
            emit(out);
        } else if (*kos_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const lie::Weight tau{lie::Role::G, serialize::parse_weight_list(weight_str)};
            lie::require_valid(tau, rank);
            json out;
            out["rank"] = n;
            out["tau"] = serialize::weight_json(tau);
            out["tau_omega"] = serialize::rational_json(lie::casimir_G(tau, rank));
            json entries = json::array();
            for (const auto& e : kostant::full_decomposition(tau, rank)) {
                json row;
                row["level"] = e.level;
                row["lambda"] = serialize::rational_json(e.lambda);
                row["sigma"] = serialize::weight_json(e.sigma);
                row["dim_sigma"] = lie::dim_M(e.sigma, rank).str();
                entries.push_back(row);
            }
            out["entries"] = entries;
            emit(out);
        } else if (*br_cmd) {
            const lie::RankData rank{n, parity};
            const lie::Role role = parse_role(role_str);
            json out;
            out["rank"] = n;
            out["parity"] = parity_name(parity);
            if (role == lie::Role::K) {
                const lie::Weight nu{lie::Role::K, serialize::parse_weight_list(weight_str)};
                lie::require_valid(nu, rank);
                out["nu"] = serialize::weight_json(nu);
                json list = json::array();
                for (const auto& s : branching::branch_K_to_M(nu, rank))
                    list.push_back(serialize::weight_json(s));
                out["types"] = list;
            } else if (role == lie::Role::M) {
                const lie::Weight sigma{lie::Role::M, serialize::parse_weight_list(weight_str)};
                lie::require_valid(sigma, rank);
                out["sigma"] = serialize::weight_json(sigma);
                json list = json::array();
                for (const auto& [nu, coeff] : branching::nu_of_sigma(sigma, rank).entries) {
                    json row;
                    row["nu"] = serialize::weight_json(nu);
                    row["coefficient"] = coeff;
                    list.push_back(row);
                }
                out["table"] = list;
            } else {
                throw std::invalid_argument("branch: role must be K or M");
            }
            emit(out);
        } else if (*pl_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const lie::Weight sigma{lie::Role::M, serialize::parse_weight_list(sigma_str)};
            lie::require_valid(sigma, rank);
            json out;
            out["rank"] = n;
            out["sigma"] = serialize::weight_json(sigma);
            out["dim_sigma"] = lie::dim_M(sigma, rank).str();
            const exact::RatPoly poly = plancherel::plancherel_polynomial(sigma, rank);
            out["polynomial"] = serialize::poly_json(poly);
            json comps = json::array();
            for (int j = 2; j <= n + 1; ++j)
                comps.push_back(serialize::poly_json(plancherel::p_j(sigma, j, rank)));
            out["components"] = comps;
            if (pl_lambda->count() > 0)
                out["value"] =
                    serialize::rational_json(poly(exact::parse_rational(lambda_str)));
            emit(out);
        } else if (*om_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const lie::Weight sigma{lie::Role::M, serialize::parse_weight_list(sigma_str)};
            lie::require_valid(sigma, rank);
            const auto om = plancherel::omega_decomposition(sigma, rank);
            json out;
            out["rank"] = n;
            out["sigma"] = serialize::weight_json(sigma);
            out["dim_sigma"] = om.dim_sigma.str();
            out["m0"] = om.m0.str();
            json poles = json::array();
            for (const auto& [l, coeff] : om.pole_terms) {
                json row;
                row["l"] = l.str();
                row["coefficient"] = serialize::rational_json(coeff);
                poles.push_back(row);
            }
            out["pole_terms"] = poles;
            out["poly_part"] = serialize::poly_json(om.poly_part);
            out["digamma_coefficient"] = serialize::rational_json(om.digamma_coefficient);
            out["resum"] =
                serialize::format_double(plancherel::omega_resum(om, omega_lambda), digits);
            out["direct"] = serialize::format_double(
                plancherel::omega_direct(sigma, omega_lambda, rank), digits);
            emit(out);
        } else if (*cf_cmd) {
            const lie::RankData rank{n, parity};
            const lie::Weight sigma{lie::Role::M, serialize::parse_weight_list(sigma_str)};
            lie::require_valid(sigma, rank);
            json out;
            out["rank"] = n;
            out["parity"] = parity_name(parity);
            out["sigma"] = serialize::weight_json(sigma);
            if (parity == lie::Parity::even) {
                if (cf_nu->count() == 0)
                    throw std::invalid_argument("cfun: even parity needs --nu");
                const lie::Weight nu{lie::Role::K, serialize::parse_weight_list(nu_str)};
                lie::require_valid(nu, rank);
                const std::complex<double> z{z_re, z_im};
                const auto c = cfunc::c_function_even(sigma, nu, z, rank);
                const auto ld = cfunc::c_log_derivative_even(sigma, nu, z, rank);
                out["nu"] = serialize::weight_json(nu);
                out["z"] = {serialize::format_double(z_re, digits),
                            serialize::format_double(z_im, digits)};
                out["c"] = {serialize::format_double(c.real(), digits),
                            serialize::format_double(c.imag(), digits)};
                out["log_derivative"] = {serialize::format_double(ld.real(), digits),
                                         serialize::format_double(ld.imag(), digits)};
            } else if (cf_base->count() > 0) {
                const auto base = serialize::parse_weight_list(base_str);
                const auto merged = cfunc::f_km(sigma, base, m_level, k_level, rank);
                out["base"] = serialize::weight_json(lie::Weight{lie::Role::G, base});
                out["m"] = m_level;
                out["k"] = k_level;
                out["poles"] = serialize::pole_list_json(merged);
                json cons = json::array();
                for (const auto& [loc, w] : merged.consolidated()) {
                    json row;
                    row["location"] = serialize::rational_json(loc);
                    row["weight"] = w;
                    cons.push_back(row);
                }
                out["consolidated"] = cons;
            } else {
                if (cf_nu->count() == 0)
                    throw std::invalid_argument("cfun: need --nu or --base");
                const lie::Weight nu{lie::Role::K, serialize::parse_weight_list(nu_str)};
                lie::require_valid(nu, rank);
                const auto poles = cfunc::c_log_derivative(sigma, nu, rank);
                out["nu"] = serialize::weight_json(nu);
                if (!poles)
                    out["zero"] = true;
                else
                    out["poles"] = serialize::pole_list_json(*poles);
            }
            emit(out);
        } else if (*mc_cmd) {
            if (!(check_c > 0)) throw std::invalid_argument("mellin-check: c > 0");
            if (check_j < 0) throw std::invalid_argument("mellin-check: j >= 0");
            double reference = 0.0, value = 0.0;
            if (check_case == "pole") {
                auto f = [&](double t) { return pole_reference(t, check_c, check_j); };
                value = mellin::numeric_mellin_finite_part(f, mellin::resolvent_ladder(), {});
                reference = -2.0 * std::log(check_c + check_j);
            } else {
                if (!(check_c2 > 0)) throw std::invalid_argument("mellin-check: c2 > 0");
                auto f = [&](double t) {
                    return digamma_reference(t, check_c) - digamma_reference(t, check_c2);
                };
                value = mellin::numeric_mellin_finite_part(f, mellin::digamma_ladder(), {});
                reference = -2.0 * (std::lgamma(1.0 + check_c) - std::lgamma(1.0 + check_c2));
            }
            const double err = std::abs(value - reference) /
                               std::max(1.0, std::abs(reference));
            json out;
            out["case"] = check_case;
            out["value"] = serialize::format_double(value, digits);
            out["reference"] = serialize::format_double(reference, digits);
            out["relative_error"] = serialize::format_double(err, digits);
            emit(out);
            if (err > check_tol)
                throw std::runtime_error("mellin-check: relative error above tolerance");
        } else if (*l2_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const auto base = serialize::parse_weight_list(base_str);
            json out;
            out["rank"] = n;
            out["base"] = serialize::weight_json(lie::Weight{lie::Role::G, base});
            out["m"] = m_level;
            const auto cf = torsion::l2_closed_form(base, m_level, rank);
            if (mode != "numeric") {
                out["polynomial"] = serialize::poly_json(torsion::l2_polynomial(base, rank));
                out["closed_form"] = serialize::closed_form_json(cf);
            }
            if (mode != "exact") {
                const auto ctx = torsion::make_context(rank, geom.input());
                out["numeric"] = serialize::format_real(ctx.evaluate(cf), digits);
            }
            emit(out);
        } else if (*tm_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const auto base = serialize::parse_weight_list(base_str);
            const auto rep = torsion::term_report(base, m_level, rank, geom.input());
            json out;
            out["rank"] = n;
            out["base"] = serialize::weight_json(lie::Weight{lie::Role::G, base});
            out["m"] = m_level;
            if (mode != "numeric") {
                out["mi"] = serialize::closed_form_json(rep.mi);
                out["mt"] = serialize::closed_form_json(rep.mt);
                out["mical"] = serialize::closed_form_json(rep.mical);
                out["mj"] = serialize::closed_form_json(rep.mj);
                out["total"] = serialize::closed_form_json(rep.total);
            }
            if (mode != "exact") {
                json num;
                num["mi"] = serialize::format_real(rep.numeric_mi, digits);
                num["mt"] = serialize::format_real(rep.numeric_mt, digits);
                num["mical"] = serialize::format_real(rep.numeric_mical, digits);
                num["mj"] = serialize::format_real(rep.numeric_mj, digits);
                num["total"] = serialize::format_real(rep.numeric_total, digits);
                num["l2"] = serialize::format_real(rep.numeric_l2, digits);
                num["residual"] = serialize::format_real(rep.residual, digits);
                out["numeric"] = num;
            }
            emit(out);
        } else if (*sw_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const auto base = serialize::parse_weight_list(base_str);
            const auto sweep = torsion::asymptotic_sweep(base, m_begin, m_end, m_step,
                                                         rank, geom.input());
            if (format == "csv") {
                std::cout << "m,l2,mt,mical,mj,residual\n";
                for (const auto& row : sweep.rows)
                    std::cout << row.m << "," << serialize::format_real(row.l2, digits)
                              << "," << serialize::format_real(row.mt, digits) << ","
                              << serialize::format_real(row.mical, digits) << ","
                              << serialize::format_real(row.mj, digits) << ","
                              << serialize::format_real(row.residual, digits) << "\n";
            } else {
                json out;
                out["rank"] = n;
                out["base"] = serialize::weight_json(lie::Weight{lie::Role::G, base});
                json rows = json::array();
                for (const auto& row : sweep.rows) {
                    json r;
                    r["m"] = row.m;
                    r["l2"] = serialize::format_real(row.l2, digits);
                    r["mt"] = serialize::format_real(row.mt, digits);
                    r["mical"] = serialize::format_real(row.mical, digits);
                    r["mj"] = serialize::format_real(row.mj, digits);
                    r["residual"] = serialize::format_real(row.residual, digits);
                    rows.push_back(r);
                }
                out["rows"] = rows;
                out["residual_slope"] = serialize::format_double(sweep.residual_slope, digits);
                out["l2_slope"] = serialize::format_double(sweep.l2_slope, digits);
                emit(out);
            }
        } else if (*hy_cmd) {
            const lie::RankData rank{n, lie::Parity::odd};
            const auto base = serialize::parse_weight_list(base_str);
            std::ifstream in(table_path);
            if (!in.is_open())
                throw std::ios_base::failure("cannot open geodesic table '" + table_path + "'");
            const auto table = serialize::load_geodesics_csv(in, n);
            const double value = torsion::H_series(heat_t, base, m_level, table, rank);
            json out;
            out["rank"] = n;
            out["base"] = serialize::weight_json(lie::Weight{lie::Role::G, base});
            out["m"] = m_level;
            out["t"] = serialize::format_double(heat_t, digits);
            out["geodesics"] = table.size();
            out["value"] = serialize::format_double(value, digits);
            emit(out);
        } else if (*ph_cmd) {
            const lie::RankData rank{n, lie::Parity::even};
            const lie::Weight w{lie::Role::G, serialize::parse_weight_list(weight_str)};
            const double value = torsion::phi_even(w, rank, phi_cfg);
            json out;
            out["rank"] = n;
            out["parity"] = "even";
            out["weight"] = serialize::weight_json(w);
            out["epsilon"] = serialize::format_double(phi_cfg.epsilon, digits);
            out["value"] = serialize::format_double(value, digits);
            emit(out);
        } else if (*cal_cmd) {
            std::vector<Rational> base;
            if (cal_base->count() > 0)
                base = serialize::parse_weight_list(base_str);
            else
                base.assign(static_cast<std::size_t>(n) + 1, Rational(1));
            const Rational q = torsion::calibrate_cn(n, base);
            const Rational lit = torsion::c_of_n_rational(n);
            json out;
            out["n"] = n;
            out["plancherel_factor"] = serialize::rational_json(q);
            out["plancherel_power"] = -(n + 1);
            out["literal_factor"] = serialize::rational_json(lit);
            out["literal_power"] = -n;
            const torsion::GeometryInput unit_geom;
            out["cn_numeric"] = serialize::format_real(
                torsion::make_context(lie::RankData{n, lie::Parity::odd}, unit_geom).cn,
                digits);
            if (lit < 0)
                out["note"] = "literal asymptotic constant is negative at this rank; "
                              "the positive Plancherel normalization is retained and "
                              "the magnitudes agree";
            emit(out);
        }
        return 0;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
