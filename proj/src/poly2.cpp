#include "polyharm/poly2.hpp"

#include <algorithm>
#include <cmath>

namespace polyharm {

Poly2::Poly2(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, Rational(c));
}

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

Poly2::Poly2(TermMap terms) {
  for (auto& [e, c] : terms) {
    if (e.a < 0 || e.b < 0) throw DomainError("negative exponent in Poly2");
    if (c != 0) terms_.emplace(e, c);
  }
}

Poly2 Poly2::monomial(const Rational& c, int a, int b) {
  if (a < 0 || b < 0) throw DomainError("negative exponent in Poly2");
  Poly2 p;
  p.add_term({a, b}, c);
  return p;
}

Poly2 Poly2::from_x(const Poly1& p) {
  Poly2 r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term({k, 0}, p.coeff(k));
  return r;
}

Poly2 Poly2::from_y(const Poly1& p) {
  Poly2 r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term({0, k}, p.coeff(k));
  return r;
}

void Poly2::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly2::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.a + e.b);
  return d;
}

int Poly2::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.a);
  return d;
}

int Poly2::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.b);
  return d;
}

Rational Poly2::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * polyharm::pow(x, e.a) * polyharm::pow(y, e.b);
  return acc;
}

double Poly2::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(x, e.a) * std::pow(y, e.b);
  return acc;
}

Poly2 Poly2::shift(const Rational& dx, const Rational& dy) const {
  // (x+dx)^a (y+dy)^b expanded binomially.
  Poly2 r;
  for (const auto& [e, c] : terms_) {
    for (int p = 0; p <= e.a; ++p) {
      Rational cx = c * Rational(binomial(e.a, p)) * polyharm::pow(dx, e.a - p);
      if (cx == 0) continue;
      for (int q = 0; q <= e.b; ++q) {
        Rational cxy = cx * Rational(binomial(e.b, q)) * polyharm::pow(dy, e.b - q);
        r.add_term({p, q}, cxy);
      }
    }
  }
  return r;
}

Poly2 Poly2::diff_x() const {
  Poly2 r;
  for (const auto& [e, c] : terms_)
    if (e.a > 0) r.add_term({e.a - 1, e.b}, c * e.a);
  return r;
}

Poly2 Poly2::diff_y() const {
  Poly2 r;
  for (const auto& [e, c] : terms_)
    if (e.b > 0) r.add_term({e.a, e.b - 1}, c * e.b);
  return r;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result(1L);
  Poly2 base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Poly1> Poly2::coeffs_in_x() const {
  const int dx = degree_x();
  if (dx < 0) return {};
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dx) + 1);
  for (const auto& [e, c] : terms_) {
    auto& v = raw[static_cast<std::size_t>(e.a)];
    if (v.size() <= static_cast<std::size_t>(e.b)) v.resize(static_cast<std::size_t>(e.b) + 1);
    v[static_cast<std::size_t>(e.b)] = c;
  }
  std::vector<Poly1> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.a + eb.a, ea.b + eb.b}, ca * cb);
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::optional<Poly2> Poly2::exact_divide(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw DomainError("Poly2 division by zero");
  // Lex order with x before y; the map's last element is the leading term.
  const auto& [lead_e, lead_c] = *b.terms_.rbegin();
  Poly2 rem = a;
  Poly2 quot;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    if (re.a < lead_e.a || re.b < lead_e.b) return std::nullopt;
    Poly2 t = monomial(rc / lead_c, re.a - lead_e.a, re.b - lead_e.b);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

Poly2 Poly2::truncate_total_degree(int max_degree) const {
  Poly2 r;
  for (const auto& [e, c] : terms_)
    if (e.a + e.b <= max_degree) r.terms_.emplace(e, c);
  return r;
}

std::string to_string(const Poly2& p, const std::string& var_a, const std::string& var_b) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first for readability.
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.a + l.first.b, dr = r.first.a + r.first.b;
    if (dl != dr) return dl > dr;
    return l.first.a > r.first.a;
  });
  for (const auto& [e, c] : terms) {
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    auto append = [&](const std::string& v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    append(var_a, e.a);
    append(var_b, e.b);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace polyharm
