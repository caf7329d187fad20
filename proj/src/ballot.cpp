#include "polyharm/ballot.hpp"

#include <mpfr.h>

#include <mutex>

#include "polyharm/counts.hpp"

namespace polyharm {

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli index must be non-negative");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    Rational acc = 0;
    for (long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[static_cast<std::size_t>(k)];
    Rational next = -acc / Rational(m + 1);
    next.canonicalize();
    table.push_back(next);
  }
  return table[static_cast<std::size_t>(n)];
}

Rational alpha(int m) {
  if (m < 1) throw DomainError("alpha(m) needs m >= 1");
  Rational b = abs(bernoulli(2 * m));
  BigInt four_m = 1, two_2m = 1;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
  mpz_ui_pow_ui(two_2m.get_mpz_t(), 2, static_cast<unsigned long>(2 * m));
  Rational r = Rational(four_m - 1) * b * Rational(two_2m) / Rational(BigInt(2 * m) * factorial(static_cast<unsigned long>(2 * m)));
  r.canonicalize();
  return r;
}

BellTable::BellTable(int smax) : smax_(smax) {
  if (smax < 0) throw DomainError("Bell table size must be non-negative");
  std::vector<Rational> x(static_cast<std::size_t>(smax) + 2);
  for (int m = 1; m <= smax; ++m) x[static_cast<std::size_t>(m)] = alpha(m + 1);
  table_.assign(static_cast<std::size_t>(smax) + 1, std::vector<Rational>(static_cast<std::size_t>(smax) + 1));
  table_[0][0] = 1;
  for (int s = 1; s <= smax; ++s)
    for (int k = 1; k <= s; ++k) {
      Rational acc = 0;
      for (int m = 1; m <= s - k + 1; ++m) acc += x[static_cast<std::size_t>(m)] * table_[static_cast<std::size_t>(s - m)][static_cast<std::size_t>(k - 1)];
      table_[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] = acc;
    }
}

const Rational& BellTable::at(int s, int k) const {
  if (s < 0 || k < 0 || s > smax_) throw DomainError("Bell table index out of range");
  static const Rational zero = 0;
  if (k > s) return zero;
  return table_[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
}

Rational bell_alpha(int s, int k) { return BellTable(s).at(s, k); }

namespace {

Rational c_alpha_with(const BellTable& bell, int k, int p) {
  if (k < 0 || k > p) throw DomainError("c_alpha needs 0 <= k <= p");
  Rational acc = 0;
  for (int j = k; j <= p; ++j) {
    Rational term = bell.at(j, k) / Rational(factorial(static_cast<unsigned long>(2 * p - 2 * j + 1)));
    if (j % 2) acc -= term;
    else acc += term;
  }
  Rational r = acc / Rational(factorial(static_cast<unsigned long>(k)));
  r.canonicalize();
  return r;
}

}  // namespace

Rational c_alpha(int k, int p) { return c_alpha_with(BellTable(std::max(p, 0)), k, p); }

BigInt gaussian_moment(int k) {
  if (k < 0) throw DomainError("Gaussian moment index must be non-negative");
  BigInt two_k = 1;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return factorial(static_cast<unsigned long>(2 * k)) / (two_k * factorial(static_cast<unsigned long>(k)));
}

Poly1 h_poly(int j) {
  if (j < 0) throw DomainError("h_j needs j >= 0");
  const BellTable bell(j);
  const Poly1 lam1 = Poly1::variable() + Poly1(1);
  Poly1 h;
  for (int p = 0; p <= j; ++p)
    for (int k = 0; k <= p; ++k) {
      Rational c = c_alpha_with(bell, k, p) * Rational(gaussian_moment(k + j + 1)) /
                   Rational(factorial(static_cast<unsigned long>(2 * (j - p) + 1)));
      if (k % 2) c = -c;
      h += c * lam1.pow(static_cast<unsigned>(2 * (j - p) + 1));
    }
  return h;
}

Poly2 v_diag(int p) {
  if (p < 0) throw DomainError("v_p needs p >= 0");
  std::vector<Poly1> h;
  for (int k = 0; k <= p; ++k) h.push_back(h_poly(k));
  Poly2 v;
  for (int k = 0; k <= p; ++k) v += Poly2::from_x(h[static_cast<std::size_t>(k)]) * Poly2::from_y(h[static_cast<std::size_t>(p - k)]);
  return v;
}

Poly1 laplacian_1d(const Poly1& f) {
  const Poly1 t = Poly1::variable();
  Poly1 avg = f.compose(t + Poly1(1)) + f.compose(t - Poly1(1));
  return avg * make_rational(1, 2) - f;
}

namespace {

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, 512); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

double dyck_truncation_error(long lambda, long n, int J) {
  if (lambda < 0 || n <= 0 || (n - lambda) % 2 != 0) throw DomainError("dyck_truncation_error needs lambda = n mod 2, n > 0");
  if (J < 0) throw DomainError("truncation order must be non-negative");
  Rational series = 0;
  for (int j = 0; j <= J; ++j) {
    Rational term = h_poly(j)(Rational(lambda)) / pow(Rational(n), j);
    if (j % 2) series -= term;
    else series += term;
  }
  Mpfr count, tmp, s;
  const BigInt m = closed_dyck(lambda, n);
  mpfr_set_z(count.v, m.get_mpz_t(), MPFR_RNDN);
  mpfr_div_2ui(count.v, count.v, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_const_pi(tmp.v, MPFR_RNDN);
  mpfr_sqrt(tmp.v, tmp.v, MPFR_RNDN);
  mpfr_mul(count.v, count.v, tmp.v, MPFR_RNDN);
  mpfr_set_si(tmp.v, n, MPFR_RNDN);
  mpfr_pow_si(tmp.v, tmp.v, 3, MPFR_RNDN);
  mpfr_sqrt(tmp.v, tmp.v, MPFR_RNDN);
  mpfr_mul(count.v, count.v, tmp.v, MPFR_RNDN);
  mpfr_set_ui(tmp.v, 8, MPFR_RNDN);
  mpfr_sqrt(tmp.v, tmp.v, MPFR_RNDN);  // 2 sqrt 2
  mpfr_div(count.v, count.v, tmp.v, MPFR_RNDN);
  mpfr_set_q(s.v, series.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(count.v, count.v, s.v, MPFR_RNDN);
  mpfr_abs(count.v, count.v, MPFR_RNDN);
  return mpfr_get_d(count.v, MPFR_RNDN);
}

}  // namespace polyharm
