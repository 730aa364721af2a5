#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace endprox {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// a / b as a double without overflow for huge operands. b must be nonzero.
double ratio(const BigInt& a, const BigInt& b);

}  // namespace endprox
