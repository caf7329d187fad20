// One line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [--json path] [criterion ids...]

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "polyharm/acceptance.hpp"

int main(int argc, char** argv) {
  polyharm::AcceptanceOptions opts;
  std::string json_path;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--json" && k + 1 < argc)
      json_path = argv[++k];
    else
      opts.only.push_back(std::atoi(arg.c_str()));
  }
  const auto results = polyharm::run_acceptance(opts);
  bool all = true;
  for (const auto& r : results) {
    std::string limit = r.time_limit > 0 ? " (limit " + std::to_string(static_cast<int>(r.time_limit)) + " s)" : "";
    std::printf("[%s] criterion %d: %s  %.2f s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds, limit.c_str());
    if (!r.pass)
      for (const auto& c : r.details)
        if (!c.value("pass", true)) std::printf("       failed check: %s\n", c.dump().c_str());
    all = all && r.pass;
  }
  if (!json_path.empty()) std::ofstream(json_path) << polyharm::acceptance_to_json(results).dump(2) << "\n";
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
