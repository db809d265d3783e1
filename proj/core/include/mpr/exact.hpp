#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace mpr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an arbitrary precision integer.
BigInt factorial(unsigned n);

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
/// The empty matrix has determinant 1.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Nearest double to an exact rational.
double to_double(const Rational& x);

}  // namespace mpr
