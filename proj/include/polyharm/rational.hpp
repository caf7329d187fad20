#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyharm {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Every exact constant of the library lives here.
using Rational = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, polynomials, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity the construction relies on did not hold.
class IdentityError : public Error {
 public:
  using Error::Error;
};

/// Builds num/den and canonicalizes. Throws DomainError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "n", "-n" or "n/d" (decimal digits only).
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "5/1", "-1/4".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

double to_double(const Rational& q);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// Rational power with integer exponent (negative exponents allowed for q != 0).
Rational pow(const Rational& q, long e);

}  // namespace polyharm
