#include "altruns/rational.hpp"

#include "altruns/errors.hpp"

namespace altruns {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational: '" + s + "'");
  }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt to_integer(const Rational& q) {
  if (!is_integer(q)) throw DomainError("not an integer: " + to_string(q));
  return q.get_num();
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    const auto e = static_cast<unsigned long>(exponent);
    return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
  }
  if (base == 0) throw DomainError("zero raised to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(pow(base.get_den(), e), pow(base.get_num(), e));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace altruns
