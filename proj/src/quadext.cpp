#include "polyharm/quadext.hpp"

namespace polyharm {

QuadExtFun::QuadExtFun(RatFun1 a, RatFun1 b, Poly1 delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {}

void QuadExtFun::require_same(const QuadExtFun& o) const {
  if (!(delta_ == o.delta_))
    throw CompositionError("mixing radicands " + to_string(delta_, "y") + " and " + to_string(o.delta_, "y"));
}

RatFun1 QuadExtFun::norm() const { return a_ * a_ - b_ * b_ * RatFun1(delta_); }

QuadExtFun& QuadExtFun::operator+=(const QuadExtFun& o) {
  require_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExtFun& QuadExtFun::operator-=(const QuadExtFun& o) {
  require_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExtFun& QuadExtFun::operator*=(const QuadExtFun& o) {
  require_same(o);
  RatFun1 a = a_ * o.a_ + b_ * o.b_ * RatFun1(delta_);
  RatFun1 b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExtFun& QuadExtFun::operator/=(const QuadExtFun& o) {
  require_same(o);
  RatFun1 n = o.norm();
  if (n.is_zero()) throw DomainError("division by a zero (or zero-divisor) extension element");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadExtFun& QuadExtFun::operator*=(const RatFun1& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

QuadExtFun evaluate(const Poly1& p, const QuadExtFun& u) {
  QuadExtFun acc = QuadExtFun::rational(RatFun1(), u.delta());
  for (int k = p.degree(); k >= 0; --k) {
    acc *= u;
    acc += QuadExtFun::rational(RatFun1(p.coeff(k)), u.delta());
  }
  return acc;
}

QuadExtFun compose(const RatFun1& f, const QuadExtFun& u) {
  QuadExtFun den = evaluate(f.den(), u);
  if (den.norm().is_zero()) throw PoleError("denominator vanishes identically on the extension element");
  return evaluate(f.num(), u) / den;
}

std::string to_string(const QuadExtFun& u, const std::string& var) {
  return "[" + to_string(u.a(), var) + "] + [" + to_string(u.b(), var) + "]*sqrt(" + to_string(u.delta(), var) + ")";
}

}  // namespace polyharm
