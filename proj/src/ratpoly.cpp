#include "ratpoly.hpp"

#include <stdexcept>

namespace exact {

namespace {
const Rational kZero(0);
}

RatPoly::RatPoly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly RatPoly::monomial(int deg, const Rational& coeff) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (coeff == 0) return RatPoly();
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
    c.back() = coeff;
    return RatPoly(std::move(c));
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool RatPoly::is_even() const {
    for (std::size_t k = 1; k < c_.size(); k += 2)
        if (c_[k] != 0) return false;
    return true;
}

const Rational& RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) c[a + b] += c_[a] * o.c_[b];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const Rational& s) const {
    if (s == 0) return RatPoly();
    RatPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RatPoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

std::complex<double> RatPoly::eval_complex(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

RatPoly RatPoly::at_imaginary_argument() const {
    if (!is_even()) throw std::domain_error("imaginary substitution needs an even polynomial");
    RatPoly r(*this);
    for (std::size_t k = 0; k < r.c_.size(); ++k)
        if ((k / 2) % 2 == 1) r.c_[k] = -r.c_[k];
    return r;
}

RatPoly RatPoly::antiderivative() const {
    if (is_zero()) return RatPoly();
    std::vector<Rational> c(c_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k)
        c[k + 1] = c_[k] / Rational(static_cast<int>(k) + 1);
    return RatPoly(std::move(c));
}

Rational RatPoly::integrate(const Rational& a, const Rational& b) const {
    RatPoly F = antiderivative();
    return F(b) - F(a);
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    RatPoly r = num;
    std::vector<Rational> q;
    int dq = num.degree() - den.degree();
    if (dq < 0) return {RatPoly(), r};
    q.assign(static_cast<std::size_t>(dq) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int k = r.degree() - den.degree();
        Rational f = r.leading() / den.leading();
        q[static_cast<std::size_t>(k)] = f;
        r -= den * monomial(k, f);
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::divide_exact(const RatPoly& num, const RatPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::runtime_error("polynomial division left a remainder");
    return q;
}

}  // namespace exact
