#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace bklab {

/// 50 decimal digits (166-bit mantissa) with a practically unbounded exponent,
/// so 2^{2n} and e^{52} scales never overflow or underflow.
using Real = boost::multiprecision::cpp_bin_float_50;

Real binom(unsigned n, unsigned r);
Real factorial(unsigned n);
/// sum_{j=0}^{k-1} C(n, j)
Real binom_prefix_sum(unsigned n, unsigned k);
Real log2_of(const Real& x);
/// Scientific notation with `digits` significant digits.
std::string to_decimal(const Real& x, int digits = 40);

}  // namespace bklab
