#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace linshap {

// Arbitrary-precision integers and reduced rationals, backed by GMP.
// Every Rational in the library is kept canonical: lowest terms,
// positive denominator, zero stored as 0/1. mpq arithmetic preserves
// canonical form as long as the operands are canonical, so the only
// care point is construction from a raw numerator/denominator pair.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);
BigInt pow3(unsigned long n);

// "num/den", the denominator always spelled out ("0/1", "9/1", "-13/12").
std::string fraction_string(const Rational& value);

// Fixed-point decimal with `digits` places after the point, rounded
// half-to-even against the exact value. A value that rounds to zero is
// printed without a sign.
std::string decimal_string(const Rational& value, unsigned digits);

}  // namespace linshap
