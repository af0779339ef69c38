#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geomexp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Int128 = __int128;
using Int256 = boost::multiprecision::int256_t;

inline int sign_of(const Rational& r) {
    return r.sign();
}

inline int sign_of(Int128 v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline int sign_of(const Int256& v) {
    return v.sign();
}

/// Exact sign of ux*vy - uy*vx for 128-bit operands (promotes to 256 bits).
inline int cross_sign(Int128 ux, Int128 uy, Int128 vx, Int128 vy) {
    Int256 a = Int256(ux) * Int256(vy);
    Int256 b = Int256(uy) * Int256(vx);
    return a > b ? 1 : (a < b ? -1 : 0);
}

inline int dot_sign(Int128 ux, Int128 uy, Int128 vx, Int128 vy) {
    Int256 s = Int256(ux) * Int256(vx) + Int256(uy) * Int256(vy);
    return sign_of(s);
}

// Parses "p/q", integers, and plain decimals ("-0.25") exactly.
Rational parse_rational(const std::string& s);

// Reduced "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

// Exact conversion; throws on NaN/inf.
Rational rational_from_double(double x);

double rational_to_double(const Rational& r);

// floor(num/den) for exact rationals.
BigInt floor_div(const BigInt& num, const BigInt& den);

BigInt binomial(long long n, long long k);

}  // namespace geomexp
