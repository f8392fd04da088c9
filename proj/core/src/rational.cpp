#include "liouv/rational.hpp"

#include <stdexcept>

namespace liouv {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInteger(num), BigInteger(den));
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  BigRational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigInteger lcm(const BigInteger& a, const BigInteger& b) {
  BigInteger r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
  BigInteger r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace liouv
