#pragma once

#include <cstdint>
#include <string>

namespace props {

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

Result ring_axioms(int cases, std::uint64_t seed);
Result pochhammer_laws(int cases, std::uint64_t seed);
Result invert_round_trip(int cases, std::uint64_t seed);
// Five registry identities at N = 10, 20, 30: each passes, and every side
// computed at N agrees with the N = 30 computation through q^N.
Result order_refinement();

}  // namespace props
