#ifndef DOLDEF_IDENTITIES_HPP
#define DOLDEF_IDENTITIES_HPP

#include <cstdint>

#include "doldef/special.hpp"

namespace doldef {

struct IdentityReport {
  std::string name;
  int cases = 0;
  bool passed = false;
  std::string detail;  // first failure, when any
};

/// Seeded random checks of the operator identities the engine is built on;
/// every check is exact. `cases` is the number of random instances per
/// identity.
std::vector<IdentityReport> run_identity_suite(const HodgeContext& ctx, std::uint64_t seed,
                                               int cases = 50);

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace doldef

#endif
