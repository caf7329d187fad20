#include "polyharm/ratfun.hpp"

namespace polyharm {

RatFun1::RatFun1(const Poly1& num) : num_(num), den_(1L) {}

RatFun1::RatFun1(const Rational& c) : num_(c), den_(1L) {}

RatFun1::RatFun1(long c) : num_(c), den_(1L) {}

RatFun1::RatFun1(const Poly1& num, const Poly1& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFun1::normalize() {
  if (num_.is_zero()) {
    den_ = Poly1(1L);
    return;
  }
  Poly1 g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly1::divmod(num_, g).first;
    den_ = Poly1::divmod(den_, g).first;
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFun1::operator()(const Rational& t) const {
  Rational d = den_(t);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_(t) / d;
}

RatFun1 RatFun1::derivative() const {
  return RatFun1(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun1 RatFun1::compose(const RatFun1& inner) const {
  // Homogenize: num(p/q) q^n / (den(p/q) q^n) with n = max degree.
  const int n = std::max(num_.degree(), den_.degree());
  const Poly1& p = inner.num();
  const Poly1& q = inner.den();
  auto homog = [&](const Poly1& f) {
    Poly1 acc;
    for (int k = 0; k <= f.degree(); ++k) acc += f.coeff(k) * p.pow(static_cast<unsigned>(k)) * q.pow(static_cast<unsigned>(n - k));
    return acc;
  };
  Poly1 d = homog(den_);
  if (d.is_zero()) throw DomainError("composition lands on a pole identically");
  return RatFun1(homog(num_), d);
}

RatFun1& RatFun1::operator+=(const RatFun1& o) {
  *this = RatFun1(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFun1& RatFun1::operator-=(const RatFun1& o) {
  *this = RatFun1(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFun1& RatFun1::operator*=(const RatFun1& o) {
  *this = RatFun1(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFun1& RatFun1::operator/=(const RatFun1& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  *this = RatFun1(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFun1 RatFun1::operator-() const {
  RatFun1 r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string to_string(const RatFun1& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace polyharm
