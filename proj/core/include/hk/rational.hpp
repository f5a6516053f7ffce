#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hk/error.hpp"

namespace hk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Integer& n) { return n.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

// Floor of sqrt(n); n must be >= 0.
inline Integer isqrt(const Integer& n) {
    require(n >= 0, "negative sqrt");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// "p/q" with q > 0 and gcd(p,q) = 1; plain "p" when q = 1.
std::string to_string(const Rational& q);

// Parses the formats produced by to_string; also accepts a leading '+'.
Rational rational_from_string(const std::string& s);

}  // namespace hk
