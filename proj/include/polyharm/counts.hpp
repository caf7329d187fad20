#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyharm/rational.hpp"
#include "polyharm/step_model.hpp"

namespace polyharm {

/// q((i,j),(0,0);n): number of n-step quadrant paths from (i,j) to the origin,
/// unit step weights. Stored densely on [0,n] x [0,n].
class CountTable {
 public:
  CountTable(std::string model, int n);

  const std::string& model() const { return model_; }
  int n() const { return n_; }
  /// Zero outside [0,n]^2.
  BigInt at(int i, int j) const;
  BigInt& ref(int i, int j);

 private:
  std::string model_;
  int n_;
  std::vector<BigInt> values_;
};

/// Tables for n = 0..n_max via q(x;0) = 1{x=0}, q(x;n+1) = sum_s q(x+s;n) 1{x+s in quadrant}.
std::vector<CountTable> count_dp(const StepModel& model, int n_max);

/// Same recursion keeping two layers; the callback sees each table once, in order.
void count_dp_stream(const StepModel& model, int n_max, const std::function<void(const CountTable&)>& sink);

/// Number of n-step quadrant walks from the origin using the reversed steps,
/// i.e. the total mass of the n-th count table.
BigInt count_reversed_walks(const StepModel& model, int n);

BigInt closed_simple(long i, long j, long n);
BigInt closed_diagonal(long i, long j, long n);
BigInt closed_tandem(long i, long j, long n);
/// Non-negative 1D paths from 0 to lambda with n steps (ballot numbers).
BigInt closed_dyck(long lambda, long n);

/// Closed form for a built-in model by name.
BigInt closed_count(const std::string& model, long i, long j, long n);

/// True when (i,j) is reachable from the origin in exactly n steps for the
/// built-in model (parity for simple/diagonal, n = 3m+2i+j for tandem).
bool reachable(const std::string& model, long i, long j, long n);

}  // namespace polyharm
