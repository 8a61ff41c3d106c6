#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>

namespace bergman {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Narrowing conversion that throws PreconditionViolated when `v` does not
/// fit, so exponent arithmetic never silently wraps.
std::int64_t to_int64(const Integer& v);

/// gcd on absolute values with gcd(x, 0) = |x|.
Integer gcd_abs(const Integer& a, const Integer& b);

}  // namespace bergman
