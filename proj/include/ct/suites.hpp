#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Deterministic test batteries shared by the CLI `suite` verb and the
// acceptance battery: the worked-example checks and the seeded randomized
// property suites.
namespace ct::suites {

struct SuiteItem {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string detail;

  bool ok() const { return instances > 0 && failures == 0; }
};

// The fixed example battery: graph products, non-preservation, the
// reflexive-graph counterexample, the injection binomial formula,
// siftedness agreement, roundtrips, EM, quotients, adjoints.
std::vector<SuiteItem> paper_examples(std::size_t sifted_set_bound = 3);

// Seeded randomized suites; identical seed ⇒ identical report.
std::vector<SuiteItem> property_suites(std::uint64_t seed, std::size_t per_suite = 500);

}  // namespace ct::suites
