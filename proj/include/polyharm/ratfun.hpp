#pragma once

#include <string>

#include "polyharm/poly1.hpp"

namespace polyharm {

/// Univariate rational function num/den over Q, kept normalized: gcd(num, den) = 1
/// and den monic, so two equal functions compare equal structurally.
class RatFun1 {
 public:
  RatFun1() : num_(), den_(1L) {}
  RatFun1(const Poly1& num);  // NOLINT(google-explicit-constructor)
  RatFun1(const Rational& c);  // NOLINT
  RatFun1(long c);  // NOLINT
  RatFun1(const Poly1& num, const Poly1& den);

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws DomainError at a pole.
  Rational operator()(const Rational& t) const;
  RatFun1 derivative() const;
  /// this(inner(t)).
  RatFun1 compose(const RatFun1& inner) const;

  RatFun1& operator+=(const RatFun1& o);
  RatFun1& operator-=(const RatFun1& o);
  RatFun1& operator*=(const RatFun1& o);
  RatFun1& operator/=(const RatFun1& o);

  friend RatFun1 operator+(RatFun1 a, const RatFun1& b) { return a += b; }
  friend RatFun1 operator-(RatFun1 a, const RatFun1& b) { return a -= b; }
  friend RatFun1 operator*(RatFun1 a, const RatFun1& b) { return a *= b; }
  friend RatFun1 operator/(RatFun1 a, const RatFun1& b) { return a /= b; }
  RatFun1 operator-() const;

  friend bool operator==(const RatFun1& a, const RatFun1& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Poly1 num_;
  Poly1 den_;
};

std::string to_string(const RatFun1& f, const std::string& var = "y");

}  // namespace polyharm
