#pragma once

#include <complex>
#include <vector>

#include "rational.hpp"

namespace exact {

// Dense univariate polynomial over the rationals, ascending coefficients.
// The zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(const Rational& constant);
    explicit RatPoly(std::vector<Rational> coeffs);

    static RatPoly monomial(int deg, const Rational& coeff = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_even() const;  // only even powers occur
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
    RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly scaled(const Rational& s) const;

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;
    std::complex<double> eval_complex(std::complex<double> x) const;

    // substitute x -> i*x for an even polynomial: coefficient of x^{2k}
    // picks up (-1)^k; exact and real
    RatPoly at_imaginary_argument() const;

    RatPoly antiderivative() const;
    Rational integrate(const Rational& a, const Rational& b) const;

    // exact division; throws if the remainder is nonzero
    static RatPoly divide_exact(const RatPoly& num, const RatPoly& den);
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

private:
    void normalize();
    std::vector<Rational> c_;
};

}  // namespace exact
