#pragma once

// Arbitrary-precision integer and rational scalars used throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace erpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }

inline Int abs_int(const Int& v) { return boost::multiprecision::abs(v); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Smallest integer s with s*s >= n (n >= 0).
inline Int ceil_sqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("ceil_sqrt: negative argument");
    Int s = boost::multiprecision::sqrt(n);  // floor
    if (s * s < n) ++s;
    return s;
}

inline Int pow_int(const Int& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

}  // namespace erpoly
