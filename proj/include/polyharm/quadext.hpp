#pragma once

#include <string>

#include "polyharm/ratfun.hpp"

namespace polyharm {

/// Radicands differ between two operands.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// A rational function would have to be evaluated at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Element a + b*sqrt(delta) of Q(y)[sqrt(delta)], delta a fixed univariate
/// polynomial. Elements over different radicands never mix.
class QuadExtFun {
 public:
  QuadExtFun(RatFun1 a, RatFun1 b, Poly1 delta);

  static QuadExtFun rational(const RatFun1& a, const Poly1& delta) { return {a, RatFun1(), delta}; }
  static QuadExtFun sqrt_delta(const Poly1& delta) { return {RatFun1(), RatFun1(1L), delta}; }

  const RatFun1& a() const { return a_; }
  const RatFun1& b() const { return b_; }
  const Poly1& delta() const { return delta_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True when the element lies in the rational subfield Q(y).
  bool is_rational() const { return b_.is_zero(); }

  QuadExtFun conj() const { return {a_, -b_, delta_}; }
  /// a^2 - b^2 delta, the product with the conjugate.
  RatFun1 norm() const;

  QuadExtFun& operator+=(const QuadExtFun& o);
  QuadExtFun& operator-=(const QuadExtFun& o);
  QuadExtFun& operator*=(const QuadExtFun& o);
  QuadExtFun& operator/=(const QuadExtFun& o);
  QuadExtFun& operator*=(const RatFun1& c);

  friend QuadExtFun operator+(QuadExtFun u, const QuadExtFun& v) { return u += v; }
  friend QuadExtFun operator-(QuadExtFun u, const QuadExtFun& v) { return u -= v; }
  friend QuadExtFun operator*(QuadExtFun u, const QuadExtFun& v) { return u *= v; }
  friend QuadExtFun operator/(QuadExtFun u, const QuadExtFun& v) { return u /= v; }
  friend QuadExtFun operator*(QuadExtFun u, const RatFun1& c) { return u *= c; }
  friend QuadExtFun operator*(const RatFun1& c, QuadExtFun u) { return u *= c; }
  QuadExtFun operator-() const { return {-a_, -b_, delta_}; }

  friend bool operator==(const QuadExtFun& u, const QuadExtFun& v) {
    return u.delta_ == v.delta_ && u.a_ == v.a_ && u.b_ == v.b_;
  }

 private:
  void require_same(const QuadExtFun& o) const;
  RatFun1 a_;
  RatFun1 b_;
  Poly1 delta_;
};

/// p(u) by Horner in the extension.
QuadExtFun evaluate(const Poly1& p, const QuadExtFun& u);

/// f(u) for a rational function f. Throws PoleError when the denominator of f
/// vanishes identically at u.
QuadExtFun compose(const RatFun1& f, const QuadExtFun& u);

std::string to_string(const QuadExtFun& u, const std::string& var = "y");

}  // namespace polyharm
