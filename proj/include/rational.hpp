#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }
inline bool is_half_integer(const Rational& q) { return denom(q) == 2; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "7", "-3/4" and decimal literals like "2.5"; decimals become exact
// rationals (25/10 reduced), so geometry inputs round-trip without float noise.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(Int(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits = digits.substr(1);
    if (digits.empty()) throw std::invalid_argument("bad rational literal '" + text + "'");
    Int p(digits);
    Int q = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) q *= 10;
    Rational r(p, q);
    return neg ? Rational(-r) : r;
}

inline std::string format_rational(const Rational& q) {
    std::string s = numer(q).str();
    if (denom(q) != 1) s += "/" + denom(q).str();
    return s;
}

inline Int isqrt_floor(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(v);
}

// Exact square root of a nonnegative rational when it is the square of a
// rational; nullopt otherwise.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("exact_sqrt of negative rational");
    Int p = numer(q), d = denom(q);
    Int sp = isqrt_floor(p), sd = isqrt_floor(d);
    if (sp * sp == p && sd * sd == d) return Rational(sp, sd);
    return std::nullopt;
}

}  // namespace exact
