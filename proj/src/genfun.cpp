#include "polyharm/genfun.hpp"

#include <algorithm>

namespace polyharm {

namespace {

Poly1 lcm(const Poly1& a, const Poly1& b) { return Poly1::divmod(a * b, gcd(a, b)).first.monic(); }

Poly1 quotient(const Poly1& a, const Poly1& b) { return Poly1::divmod(a, b).first; }

Poly2 swap_vars(const Poly2& p) {
  Poly2::TermMap t;
  for (const auto& [e, c] : p.terms()) t.emplace(Exponent{e.b, e.a}, c);
  return Poly2(std::move(t));
}

Poly1 content_y(const Poly2& p) {
  Poly1 g;
  for (const auto& c : p.coeffs_in_x()) g = gcd(g, c);
  return g;
}

// num / (dx(x) dy(y)) with monic dx, dy.
struct SepFrac {
  Poly2 num;
  Poly1 dx = Poly1(1);
  Poly1 dy = Poly1(1);
};

SepFrac reduce(SepFrac s) {
  if (s.num.is_zero()) return {Poly2(), Poly1(1), Poly1(1)};
  Poly1 g = gcd(content_y(s.num), s.dy);
  if (g.degree() > 0) {
    s.num = *Poly2::exact_divide(s.num, Poly2::from_y(g));
    s.dy = quotient(s.dy, g);
  }
  g = gcd(content_y(swap_vars(s.num)), s.dx);
  if (g.degree() > 0) {
    s.num = *Poly2::exact_divide(s.num, Poly2::from_x(g));
    s.dx = quotient(s.dx, g);
  }
  const Rational lx = s.dx.leading(), ly = s.dy.leading();
  s.num *= 1 / (lx * ly);
  s.dx = s.dx.monic();
  s.dy = s.dy.monic();
  return s;
}

SepFrac in_x(const RatFun1& f) { return reduce({Poly2::from_x(f.num()), f.den(), Poly1(1)}); }
SepFrac in_y(const RatFun1& f) { return reduce({Poly2::from_y(f.num()), Poly1(1), f.den()}); }

SepFrac operator+(const SepFrac& a, const SepFrac& b) {
  const Poly1 lx = lcm(a.dx, b.dx), ly = lcm(a.dy, b.dy);
  SepFrac s;
  s.num = a.num * Poly2::from_x(quotient(lx, a.dx)) * Poly2::from_y(quotient(ly, a.dy)) +
          b.num * Poly2::from_x(quotient(lx, b.dx)) * Poly2::from_y(quotient(ly, b.dy));
  s.dx = lx;
  s.dy = ly;
  return reduce(s);
}

SepFrac operator-(const SepFrac& a) { return {-a.num, a.dx, a.dy}; }
SepFrac operator-(const SepFrac& a, const SepFrac& b) { return a + (-b); }

GFRat over_kernel(const SepFrac& n, const Poly2& k, const char* what) {
  std::optional<Poly2> q = Poly2::exact_divide(n.num, k);
  if (!q) throw IdentityError(std::string(what) + ": numerator does not vanish on the kernel curve");
  SepFrac r = reduce({*q, n.dx, n.dy});
  return {r.num, Poly2::from_x(r.dx) * Poly2::from_y(r.dy)};
}

SepFrac as_sep(const GFRat& g) {
  // den of every GF built here is a product dx(x) dy(y)
  const Rational c = g.den.coeff(0, 0);
  std::vector<Poly1> cols = g.den.coeffs_in_x();
  Poly1 dy = cols.front();
  Poly1 dx;
  for (std::size_t k = 0; k < cols.size(); ++k) dx += Poly1::monomial(cols[k].coeff(0), static_cast<int>(k));
  if (c == 0 || !(Poly2::from_x(dx) * Poly2::from_y(dy) * (1 / c) == g.den))
    throw DomainError("generating function denominator is not separable");
  SepFrac s{g.num * c, dx, dy};
  return reduce(s);
}

Rational coeff_or_zero(const GridFunction& g, int i, int j) { return g.value(i, j); }

}  // namespace

GFRat harmonic_gf(const StepModel& model, const Poly1& p) {
  const KernelData kd = kernel_data(model);
  const Branches br = branches_x(kd);
  const RatFun1 pw = RatFun1(p).compose(omega(model));
  const QuadExtFun at_plus = compose(pw, br.plus);
  if (!at_plus.is_rational()) throw IdentityError("P(omega(X+)) is not rational in y");
  return over_kernel(in_x(pw) - in_y(at_plus.a()), kd.kernel, "harmonic generating function");
}

namespace {

QuadExtFun x_plus_h_ext(const StepModel& model, const KernelData& kd, const Branches& br, const Poly1& p) {
  const RatFun1 w = omega(model);
  const RatFun1 f = RatFun1(p.derivative()).compose(w) * w.derivative();
  QuadExtFun diff = br.plus - br.minus;
  diff *= RatFun1(kd.altilde);
  return br.plus * compose(f, br.plus) / diff;
}

}  // namespace

RatFun1 x_plus_h_at_x_plus(const StepModel& model, const Poly1& p) {
  const KernelData kd = kernel_data(model);
  const Branches br = branches_x(kd);
  const QuadExtFun v = x_plus_h_ext(model, kd, br, p);
  if (!v.is_rational()) throw IdentityError("X+ H(X+, y) is not rational in y");
  return v.a();
}

GFRat biharmonic_gf(const StepModel& model, const Poly1& p, const Poly1& q, const std::optional<RatFun1>& decoupling) {
  const KernelData kd = kernel_data(model);
  const Branches br = branches_x(kd);
  const RatFun1 w = omega(model);
  const RatFun1 y_fun(Poly1::variable());

  const QuadExtFun w_plus = compose(w, br.plus);
  if (!w_plus.is_rational()) throw IdentityError("omega(X+) is not rational in y");
  const RatFun1 qw = RatFun1(q).compose(w);
  const RatFun1 q_plus = RatFun1(q).compose(w_plus.a());

  QuadExtFun boundary = x_plus_h_ext(model, kd, br, p) * y_fun;
  SepFrac g_term;
  if (decoupling) {
    const RatFun1 g = Rational(3) * *decoupling * RatFun1(p.derivative()).compose(w);
    boundary -= compose(g, br.plus);
    g_term = in_x(g);
  }
  if (!boundary.is_rational()) throw IdentityError("boundary term has a nonzero sqrt(deltilde) component");

  const SepFrac h = as_sep(harmonic_gf(model, p));
  const SepFrac xyh{h.num * Poly2::monomial(1, 1, 1), h.dx, h.dy};
  const SepFrac n = in_x(qw) - in_y(q_plus) + g_term + in_y(boundary.a()) - xyh;
  return over_kernel(n, kd.kernel, "bi-harmonic generating function");
}

GFRat biharmonic_gf_simple(const Poly1& p, const Poly1& q) { return biharmonic_gf(StepModel::simple(), p, q, std::nullopt); }

GFRat biharmonic_gf_tandem(const Poly1& p, const Poly1& q) {
  return biharmonic_gf(StepModel::tandem(), p, q, tandem_decoupling_function());
}

RatFun1 tandem_decoupling_function() {
  const Poly1 t = Poly1::variable();
  return RatFun1(-t.pow(3), (Poly1(1) - t).pow(6));
}

bool verify_decoupling(const StepModel& model, const RatFun1& w, const RatFun1& f) {
  const KernelData kd = kernel_data(model);
  const Branches br = branches_x(kd);
  const RatFun1 y_fun(Poly1::variable());
  const RatFun1 dw = w.derivative();
  const QuadExtFun lhs = br.plus * compose(dw, br.plus) * y_fun / (br.plus - br.minus) -
                         br.minus * compose(dw, br.minus) * y_fun / (br.minus - br.plus);
  const QuadExtFun rhs = compose(f, br.plus) - compose(f, br.minus);
  return lhs == rhs;
}

bool verify_decoupling_tandem(const RatFun1& f) {
  const StepModel m = StepModel::tandem();
  return verify_decoupling(m, omega(m), f);
}

GridFunction gf_extract_coeffs(const GFRat& gf, int imax, int jmax) {
  if (gf.den.is_zero()) throw DomainError("zero denominator");
  const int a = gf.den.degree_x(), b = gf.den.degree_y();
  const Rational c = gf.den.coeff(0, 0);
  const Poly1 one_minus = Poly1(1) - Poly1::variable();
  if (c == 0 || !(c * Poly2::from_x(one_minus.pow(static_cast<unsigned>(a))) * Poly2::from_y(one_minus.pow(static_cast<unsigned>(b))) == gf.den))
    throw DomainError("denominator is not of the form c(1-x)^a(1-y)^b; use coefficient verification instead");
  auto series = [](int power, int k) -> BigInt {
    // [t^k] (1-t)^{-power}
    if (k < 0) return 0;
    if (power == 0) return k == 0 ? 1 : 0;
    return binomial(k + power - 1, power - 1);
  };
  return GridFunction::tabulate(imax, jmax, [&](int i, int j) {
    Rational acc = 0;
    for (const auto& [e, coef] : gf.num.terms())
      if (e.a <= i && e.b <= j) acc += coef * Rational(series(a, i - e.a) * series(b, j - e.b));
    return Rational(acc / c);
  });
}

CoeffCheck gf_verify_coeffs(const GFRat& gf, const Poly2& candidate, int order) {
  if (order < 0) throw DomainError("order must be non-negative");
  for (int d = 0; d <= order; ++d)
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      Rational acc = 0;
      for (const auto& [e, coef] : gf.den.terms())
        if (e.a <= i && e.b <= j) acc += coef * candidate(Rational(i - e.a), Rational(j - e.b));
      if (acc != gf.num.coeff(i, j)) return {false, i, j};
    }
  return {};
}

Proportionality fit_proportional(const GridFunction& g, const GridFunction& ref) {
  const int imax = std::min(g.imax(), ref.imax()), jmax = std::min(g.jmax(), ref.jmax());
  Proportionality out;
  Rational c;
  bool found = false;
  for (int i = 0; i <= imax && !found; ++i)
    for (int j = 0; j <= jmax && !found; ++j)
      if (ref.at(i, j) != 0) {
        c = coeff_or_zero(g, i, j) / ref.at(i, j);
        out.base_i = i;
        out.base_j = j;
        found = true;
      }
  if (!found) c = 0;
  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j <= jmax; ++j)
      if (g.at(i, j) != c * ref.at(i, j)) {
        out.bad_i = i;
        out.bad_j = j;
        return out;
      }
  out.constant = c;
  return out;
}

}  // namespace polyharm
