// Exact arithmetic carriers: arbitrary-precision integers and reduced rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hcb {

using BigInt = boost::multiprecision::cpp_int;

/// Rational with canonical form: gcd(|num|,den) = 1 and den > 0.
/// cpp_rational maintains exactly this invariant after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

/// Builds num/den with any sign of den (cpp_rational's own two-argument
/// constructor insists on a positive one). Throws on a zero denominator.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Floor division, rounding toward minus infinity for any sign of a.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rat(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

inline BigInt ceil_rat(const Rational& q) {
    BigInt f = floor_rat(q);
    return (Rational(f) == q) ? f : f + 1;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign(const BigInt& a) { return a.sign(); }
inline int sign(const Rational& q) { return numerator(q).sign(); }

/// Parses "a", "-a", or "a/b" (b > 0 after normalization). Returns nullopt on malformed input.
std::optional<Rational> try_parse_rational(const std::string& text);

/// Parsing front-end that throws std::invalid_argument instead.
Rational parse_rational(const std::string& text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

}  // namespace hcb
