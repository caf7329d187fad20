#include <doctest.h>

#include "polyharm/counts.hpp"

using namespace polyharm;

namespace {

// Direct recursion over step sequences.
long brute(const StepModel& m, int i, int j, int n) {
  if (i < 0 || j < 0) return 0;
  if (n == 0) return i == 0 && j == 0;
  long total = 0;
  for (const Step& s : m.steps()) total += brute(m, i + s.dx, j + s.dy, n - 1);
  return total;
}

BigInt catalan(long k) { return binomial(2 * k, k) / (k + 1); }

}  // namespace

TEST_CASE("dynamic program agrees with brute force") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const StepModel m = StepModel::builtin(name);
    const auto tables = count_dp(m, 8);
    for (int n = 0; n <= 8; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) CHECK(tables[static_cast<std::size_t>(n)].at(i, j) == brute(m, i, j, n));
  }
}

TEST_CASE("streaming and stored tables coincide") {
  const StepModel m = StepModel::tandem();
  const auto tables = count_dp(m, 15);
  int seen = 0;
  count_dp_stream(m, 15, [&](const CountTable& t) {
    for (int i = 0; i <= t.n(); ++i)
      for (int j = 0; j <= t.n(); ++j) CHECK(t.at(i, j) == tables[static_cast<std::size_t>(t.n())].at(i, j));
    ++seen;
  });
  CHECK(seen == 16);
  CHECK(tables[3].at(-1, 0) == 0);
  CHECK(tables[3].at(9, 0) == 0);
}

TEST_CASE("ballot numbers and Catalan") {
  for (long k = 0; k <= 12; ++k) CHECK(closed_dyck(0, 2 * k) == catalan(k));
  CHECK(closed_dyck(1, 4) == 0);
  CHECK(closed_dyck(3, 3) == 1);
  // simple excursions of length 2k: C_k C_{k+1}
  for (long k = 0; k <= 10; ++k) CHECK(closed_simple(0, 0, 2 * k) == catalan(k) * catalan(k + 1));
  // diagonal excursions: C_k^2
  for (long k = 0; k <= 10; ++k) CHECK(closed_diagonal(0, 0, 2 * k) == catalan(k) * catalan(k));
  // tandem excursions of length 3k: 2 (3k)! / (k! (k+1)! (k+2)!)
  for (long k = 0; k <= 8; ++k)
    CHECK(closed_tandem(0, 0, 3 * k) ==
          BigInt(2) * factorial(static_cast<unsigned long>(3 * k)) /
              (factorial(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(k + 1)) *
               factorial(static_cast<unsigned long>(k + 2))));
}

TEST_CASE("reachability matches the support of the counts") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const StepModel m = StepModel::builtin(name);
    count_dp_stream(m, 20, [&](const CountTable& t) {
      for (int i = 0; i <= t.n(); ++i)
        for (int j = 0; j <= t.n(); ++j) CHECK(reachable(name, i, j, t.n()) == (t.at(i, j) != 0));
    });
  }
}

TEST_CASE("symmetric models give symmetric tables") {
  const auto tables = count_dp(StepModel::simple(), 12);
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) CHECK(tables[12].at(i, j) == tables[12].at(j, i));
}

TEST_CASE("reversed walks from the origin") {
  for (const char* name : {"simple", "diagonal", "tandem"}) {
    const StepModel m = StepModel::builtin(name);
    const auto tables = count_dp(m, 10);
    for (int n = 0; n <= 10; ++n) {
      BigInt mass = 0;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) mass += tables[static_cast<std::size_t>(n)].at(i, j);
      CHECK(count_reversed_walks(m, n) == mass);
    }
  }
  CHECK_THROWS_AS(closed_count("king", 0, 0, 2), DomainError);
}
