#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liouv {

using BigInteger = mpz_class;
/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator by every library entry point.
using BigRational = mpq_class;

BigRational make_rational(const BigInteger& num, const BigInteger& den);
BigRational make_rational(long num, long den = 1);

/// Accepts "p", "-p", "p/q" with decimal digits.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInteger lcm(const BigInteger& a, const BigInteger& b);
BigInteger gcd(const BigInteger& a, const BigInteger& b);

}  // namespace liouv
