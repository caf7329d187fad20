#include "polyharm/counts.hpp"

namespace polyharm {

CountTable::CountTable(std::string model, int n) : model_(std::move(model)), n_(n) {
  if (n < 0) throw DomainError("step count must be non-negative");
  values_.resize(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1));
}

BigInt CountTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i > n_ || j > n_) return 0;
  return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j)];
}

BigInt& CountTable::ref(int i, int j) {
  if (i < 0 || j < 0 || i > n_ || j > n_) throw DomainError("count table index outside [0,n]^2");
  return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j)];
}

void count_dp_stream(const StepModel& model, int n_max, const std::function<void(const CountTable&)>& sink) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  CountTable layer(model.name(), 0);
  layer.ref(0, 0) = 1;
  sink(layer);
  for (int n = 1; n <= n_max; ++n) {
    CountTable next(model.name(), n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (const auto& s : model.steps()) acc += layer.at(i + s.dx, j + s.dy);
        next.ref(i, j) = acc;
      }
    layer = std::move(next);
    sink(layer);
  }
}

std::vector<CountTable> count_dp(const StepModel& model, int n_max) {
  std::vector<CountTable> out;
  count_dp_stream(model, n_max, [&](const CountTable& t) { out.push_back(t); });
  return out;
}

BigInt count_reversed_walks(const StepModel& model, int n) {
  if (n < 0) throw DomainError("step count must be non-negative");
  // walks from the origin with steps -s, stored on [0,n]^2
  const std::size_t w = static_cast<std::size_t>(n + 1);
  std::vector<BigInt> cur(w * w), nxt(w * w);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    std::fill(nxt.begin(), nxt.end(), BigInt(0));
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        const BigInt& c = cur[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)];
        if (c == 0) continue;
        for (const auto& s : model.steps()) {
          const int a = i - s.dx, b = j - s.dy;
          if (a < 0 || b < 0) continue;
          nxt[static_cast<std::size_t>(a) * w + static_cast<std::size_t>(b)] += c;
        }
      }
    std::swap(cur, nxt);
  }
  BigInt total = 0;
  for (const auto& c : cur) total += c;
  return total;
}

namespace {

BigInt fac(long n) { return factorial(static_cast<unsigned long>(n)); }

void require_nonneg(long i, long j, long n) {
  if (i < 0 || j < 0 || n < 0) throw DomainError("closed forms need i, j, n >= 0");
}

}  // namespace

BigInt closed_simple(long i, long j, long n) {
  require_nonneg(i, j, n);
  if (n < i + j || (n - i - j) % 2 != 0) return 0;
  const long m = (n - i - j) / 2;
  BigInt num = BigInt(i + 1) * (j + 1) * fac(n) * fac(n + 2);
  BigInt den = fac(m) * fac(m + i + j + 2) * fac(m + i + 1) * fac(m + j + 1);
  return num / den;
}

BigInt closed_diagonal(long i, long j, long n) {
  require_nonneg(i, j, n);
  if (i > n || j > n || (n - i) % 2 != 0 || (n - j) % 2 != 0) return 0;
  // (i+1)(j+1) / (((n+i+2)/2) ((n+j+2)/2)) * C(n,(n+i)/2) C(n,(n+j)/2)
  BigInt num = BigInt(i + 1) * (j + 1) * binomial(n, (n + i) / 2) * binomial(n, (n + j) / 2);
  BigInt den = BigInt((n + i + 2) / 2) * ((n + j + 2) / 2);
  return num / den;
}

BigInt closed_tandem(long i, long j, long n) {
  require_nonneg(i, j, n);
  if (n < 2 * i + j || (n - 2 * i - j) % 3 != 0) return 0;
  const long m = (n - 2 * i - j) / 3;
  BigInt num = BigInt(i + 1) * (j + 1) * (i + j + 2) * fac(n);
  BigInt den = fac(m) * fac(m + i + 1) * fac(m + i + j + 2);
  return num / den;
}

BigInt closed_dyck(long lambda, long n) {
  if (lambda < 0 || n < 0) throw DomainError("closed_dyck needs lambda, n >= 0");
  if (lambda > n || (n - lambda) % 2 != 0) return 0;
  return binomial(n, (n + lambda) / 2) - binomial(n, (n + lambda + 2) / 2);
}

BigInt closed_count(const std::string& model, long i, long j, long n) {
  if (model == "simple") return closed_simple(i, j, n);
  if (model == "diagonal") return closed_diagonal(i, j, n);
  if (model == "tandem") return closed_tandem(i, j, n);
  throw DomainError("no closed form for model '" + model + "'");
}

bool reachable(const std::string& model, long i, long j, long n) {
  if (i < 0 || j < 0 || n < 0) return false;
  if (model == "simple") return n >= i + j && (n - i - j) % 2 == 0;
  if (model == "diagonal") return i <= n && j <= n && (n - i) % 2 == 0 && (n - j) % 2 == 0;
  if (model == "tandem") return n >= 2 * i + j && (n - 2 * i - j) % 3 == 0;
  throw DomainError("no reachability rule for model '" + model + "'");
}

}  // namespace polyharm
