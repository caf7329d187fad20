#pragma once

#include <utility>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// degree 0 upwards with no trailing zeros (the zero polynomial is empty).
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  Poly1(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  Poly1(const Rational& c);  // NOLINT

  static Poly1 monomial(const Rational& c, int degree);
  static Poly1 variable() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  double eval(double t) const;

  Poly1 derivative() const;
  /// this(inner(t)).
  Poly1 compose(const Poly1& inner) const;
  Poly1 monic() const;
  Poly1 pow(unsigned e) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const Rational& c);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const Rational& c) { return a *= c; }
  friend Poly1 operator*(const Rational& c, Poly1 a) { return a *= c; }
  Poly1 operator-() const;

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DomainError when dividing by zero.
  static std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
Poly1 gcd(Poly1 a, Poly1 b);

/// Human-readable form in the given variable, e.g. "1/2*t^2 - 3".
std::string to_string(const Poly1& p, const std::string& var = "t");

}  // namespace polyharm
