#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyharm/serialize.hpp"

namespace polyharm {

struct AcceptanceOptions {
  long mc_paths = 100000;
  double mc_dt = 1e-3;
  std::uint64_t seed = 20190701;
  /// Criteria to run (1..8); empty means all.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double time_limit = 0;  // 0 when the criterion has no runtime bound
  Json details;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// {"schema":"1","command":"report-all","pass":...,"criteria":[...]}.
/// Timings are left out so equal options give byte-identical output.
Json acceptance_to_json(const std::vector<CriterionResult>& results);

CriterionResult criterion_enumeration();
CriterionResult criterion_discrete_identities();
CriterionResult criterion_ballot();
CriterionResult criterion_fitting();
CriterionResult criterion_kernel_identities();
CriterionResult criterion_gf_coefficients();
CriterionResult criterion_continuum();
CriterionResult criterion_monte_carlo(const AcceptanceOptions& opts);

}  // namespace polyharm
