#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qalink {

// All link determinants and tangle parameters are exact. Determinants grow
// multiplicatively under connected sum and tangle replacement, so every
// arithmetic path uses arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int isqrt_exact(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_exact: negative input");
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n)
        throw std::domain_error("isqrt_exact: " + n.str() + " is not a perfect square");
    return r;
}

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

} // namespace qalink
