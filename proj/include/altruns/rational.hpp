#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace altruns {

using BigInt = mpz_class;
// mpq_class keeps values in lowest terms with a positive denominator as long
// as every construction from a numerator/denominator pair goes through
// make_rational().
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
BigInt to_integer(const Rational& q);  // throws DomainError if not integral

BigInt pow(const BigInt& base, unsigned long exponent);
// Negative exponents allowed for nonzero base.
Rational pow(const Rational& base, long exponent);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

int sign(const Rational& q);

}  // namespace altruns
