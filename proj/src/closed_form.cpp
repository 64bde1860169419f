#include "closed_form.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace form {

namespace {

int log_kind_rank(Atom::LogKind k) {
    switch (k) {
        case Atom::LogKind::none: return 0;
        case Atom::LogKind::log: return 1;
        case Atom::LogKind::log_gamma: return 2;
    }
    return 0;
}

auto as_tuple(const Atom& a) {
    return std::tuple<int, bool, bool, bool, bool, bool, bool, int, bool,
                      const exact::Rational&, const std::string&>(
        a.pi_power, a.euler_gamma, a.cpsi, a.cn, a.vol, a.kappa, a.cgamma,
        log_kind_rank(a.log_kind), a.log_exact, a.log_argument, a.log_approx);
}

}  // namespace

bool Atom::operator==(const Atom& o) const { return as_tuple(*this) == as_tuple(o); }
bool Atom::operator<(const Atom& o) const { return as_tuple(*this) < as_tuple(o); }

std::string Atom::key() const {
    std::ostringstream out;
    bool first = true;
    auto put = [&](const std::string& s) {
        if (!first) out << "*";
        out << s;
        first = false;
    };
    if (pi_power == 1) {
        put("pi");
    } else if (pi_power != 0) {
        put("pi^" + std::to_string(pi_power));
    }
    if (euler_gamma) put("gamma");
    if (cpsi) put("Cpsi");
    if (cn) put("cn");
    if (vol) put("vol");
    if (kappa) put("kappa");
    if (cgamma) put("CGamma");
    if (log_kind != LogKind::none) {
        std::string name = log_kind == LogKind::log ? "log" : "logGamma";
        if (log_exact) {
            put(name + "(" + exact::format_rational(log_argument) + ")");
        } else {
            put(name + "[~" + log_approx + "]");
        }
    }
    if (first) out << "1";
    return out.str();
}

Atom unit_atom() { return Atom{}; }

Atom pi_atom(int power) {
    Atom a;
    a.pi_power = power;
    return a;
}

Atom euler_gamma_atom() {
    Atom a;
    a.euler_gamma = true;
    return a;
}

Atom cpsi_atom() {
    Atom a;
    a.cpsi = true;
    return a;
}

Atom cn_atom() {
    Atom a;
    a.cn = true;
    return a;
}

Atom vol_atom() {
    Atom a;
    a.vol = true;
    return a;
}

Atom kappa_atom() {
    Atom a;
    a.kappa = true;
    return a;
}

Atom cgamma_atom() {
    Atom a;
    a.cgamma = true;
    return a;
}

Atom log_atom(const exact::Rational& argument) {
    if (argument <= 0) throw std::invalid_argument("log_atom: argument must be positive");
    Atom a;
    a.log_kind = Atom::LogKind::log;
    a.log_argument = argument;
    return a;
}

Atom log_gamma_atom(const exact::Rational& argument) {
    if (argument <= 0) {
        throw std::invalid_argument("log_gamma_atom: argument must be positive");
    }
    Atom a;
    a.log_kind = Atom::LogKind::log_gamma;
    a.log_argument = argument;
    return a;
}

Atom approx_log_atom(const std::string& decimal_argument) {
    Atom a;
    a.log_kind = Atom::LogKind::log;
    a.log_exact = false;
    a.log_approx = decimal_argument;
    return a;
}

Atom atom_product(const Atom& a, const Atom& b) {
    Atom r = a;
    r.pi_power += b.pi_power;
    auto merge_flag = [](bool& dst, bool src, const char* what) {
        if (dst && src) {
            throw std::logic_error(std::string("atom_product: square of ") + what);
        }
        dst = dst || src;
    };
    merge_flag(r.euler_gamma, b.euler_gamma, "gamma");
    merge_flag(r.cpsi, b.cpsi, "Cpsi");
    merge_flag(r.cn, b.cn, "cn");
    merge_flag(r.vol, b.vol, "vol");
    merge_flag(r.kappa, b.kappa, "kappa");
    merge_flag(r.cgamma, b.cgamma, "CGamma");
    if (b.log_kind != Atom::LogKind::none) {
        if (r.log_kind != Atom::LogKind::none) {
            throw std::logic_error("atom_product: product of log factors");
        }
        r.log_kind = b.log_kind;
        r.log_exact = b.log_exact;
        r.log_argument = b.log_argument;
        r.log_approx = b.log_approx;
    }
    return r;
}

exact::Rational ClosedForm::coefficient(const Atom& a) const {
    auto it = coefficients.find(a);
    return it == coefficients.end() ? exact::Rational(0) : it->second;
}

exact::Rational ClosedForm::cpsi_weight() const {
    exact::Rational total = 0;
    for (const auto& [atom, coeff] : coefficients) {
        if (atom.cpsi) total += coeff;
    }
    return total;
}

void ClosedForm::add(const Atom& a, const exact::Rational& c) {
    if (c == 0) return;
    // log 1 = 0: such a monomial is identically zero, keep the map clean
    if (a.log_kind == Atom::LogKind::log && a.log_exact && a.log_argument == 1) return;
    auto [it, inserted] = coefficients.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coefficients.erase(it);
    }
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
    for (const auto& [atom, coeff] : o.coefficients) add(atom, coeff);
    return *this;
}

ClosedForm ClosedForm::operator+(const ClosedForm& o) const {
    ClosedForm r = *this;
    r += o;
    return r;
}

ClosedForm ClosedForm::operator-(const ClosedForm& o) const {
    return *this + o.scaled(-1);
}

ClosedForm ClosedForm::scaled(const exact::Rational& c) const {
    ClosedForm r;
    if (c == 0) return r;
    for (const auto& [atom, coeff] : coefficients) r.coefficients.emplace(atom, coeff * c);
    return r;
}

ClosedForm ClosedForm::times(const Atom& a) const {
    ClosedForm r;
    for (const auto& [atom, coeff] : coefficients) r.add(atom_product(atom, a), coeff);
    return r;
}

ClosedForm single(const Atom& a, const exact::Rational& c) {
    ClosedForm f;
    f.add(a, c);
    return f;
}

Real50 NumericContext::evaluate_atom(const Atom& a) const {
    if (a.cpsi) throw std::logic_error("NumericContext: Cpsi has no numeric value");
    Real50 v = 1;
    if (a.pi_power != 0) {
        v *= pow(boost::math::constants::pi<Real50>(), a.pi_power);
    }
    if (a.euler_gamma) v *= boost::math::constants::euler<Real50>();
    if (a.cn) v *= cn;
    if (a.vol) v *= vol;
    if (a.kappa) v *= kappa;
    if (a.cgamma) v *= cgamma;
    if (a.log_kind != Atom::LogKind::none) {
        Real50 arg = a.log_exact ? static_cast<Real50>(a.log_argument) : Real50(a.log_approx);
        if (arg <= 0) throw std::domain_error("NumericContext: nonpositive log argument");
        if (a.log_kind == Atom::LogKind::log) {
            v *= log(arg);
        } else {
            v *= boost::math::lgamma(arg);
        }
    }
    return v;
}

Real50 NumericContext::evaluate(const ClosedForm& f) const {
    Real50 total = 0;
    for (const auto& [atom, coeff] : f.coefficients) {
        total += evaluate_atom(atom) * static_cast<Real50>(coeff);
    }
    return total;
}

std::string to_string(const ClosedForm& f) {
    if (f.zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [atom, coeff] : f.coefficients) {
        if (!first) out << " + ";
        out << exact::format_rational(coeff) << "*" << atom.key();
        first = false;
    }
    return out.str();
}

}  // namespace form
