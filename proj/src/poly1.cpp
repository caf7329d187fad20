#include "polyharm/poly1.hpp"

#include <algorithm>

namespace polyharm {

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly1::Poly1(long c) : coeffs_{Rational(c)} { trim(); }

Poly1::Poly1(const Rational& c) : coeffs_{c} { trim(); }

Poly1 Poly1::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly1(std::move(v));
}

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly1::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly1::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly1::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly1::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly1(std::move(d));
}

Poly1 Poly1::compose(const Poly1& inner) const {
  Poly1 acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly1(*it);
  }
  return acc;
}

Poly1 Poly1::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly1 Poly1::pow(unsigned e) const {
  Poly1 result(1L);
  Poly1 base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) r[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Poly1 rem = a;
  if (rem.degree() < b.degree()) return {Poly1{}, rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - b.degree()) + 1);
  const Rational& lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    Rational c = rem.leading() / lb;
    q[static_cast<std::size_t>(shift)] = c;
    for (int k = 0; k <= b.degree(); ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= c * b.coeffs_[static_cast<std::size_t>(k)];
    rem.trim();
  }
  return {Poly1(std::move(q)), rem};
}

Poly1 gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    auto r = Poly1::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string to_string(const Poly1& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace polyharm
