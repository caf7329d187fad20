#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyharm/poly1.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

/// Exponent pair (a, b) of the monomial x^a y^b.
struct Exponent {
  int a = 0;
  int b = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse bivariate polynomial with rational coefficients. The two
/// variables are called (x, y) for generating functions and (i, j) when the
/// polynomial is read as a function on the lattice; the storage is the same.
/// Zero coefficients are never stored, so the zero polynomial is empty.
class Poly2 {
 public:
  using TermMap = std::map<Exponent, Rational>;

  Poly2() = default;
  Poly2(long c);  // NOLINT(google-explicit-constructor)
  Poly2(const Rational& c);  // NOLINT
  explicit Poly2(TermMap terms);

  static Poly2 monomial(const Rational& c, int a, int b);
  static Poly2 x() { return monomial(1, 1, 0); }
  static Poly2 y() { return monomial(1, 0, 1); }
  /// Embeds p(t) as p(x) (in_x) or p(y).
  static Poly2 from_x(const Poly1& p);
  static Poly2 from_y(const Poly1& p);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(int a, int b) const;
  /// Total degree max(a+b); -1 for zero.
  int degree() const;
  int degree_x() const;
  int degree_y() const;

  Rational operator()(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;

  /// p(x + dx, y + dy), exact.
  Poly2 shift(const Rational& dx, const Rational& dy) const;
  Poly2 diff_x() const;
  Poly2 diff_y() const;
  Poly2 pow(unsigned e) const;

  /// Coefficients of x^0, x^1, ... as polynomials in y.
  std::vector<Poly1> coeffs_in_x() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  Poly2 operator-() const;

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// a / b when b divides a exactly, otherwise nullopt.
  static std::optional<Poly2> exact_divide(const Poly2& a, const Poly2& b);

  /// Drops every monomial of total degree > max_degree.
  Poly2 truncate_total_degree(int max_degree) const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  TermMap terms_;
};

/// Human-readable form, e.g. "x^2*y - 1/4*x".
std::string to_string(const Poly2& p, const std::string& var_a = "x", const std::string& var_b = "y");

}  // namespace polyharm
