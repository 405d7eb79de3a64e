#pragma once

#include <cstdint>
#include <optional>

#include "ckq/contraction.hpp"

namespace ckq {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int points = 3;
  // Test hook: add t^2 to this R-tilde entry (1-based) before the Yang-Baxter check.
  std::optional<std::pair<int, int>> perturb_rtilde;
};

struct VerifyReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
};

/// Everything checkable for one spec: basis change, R-tilde, Yang-Baxter,
/// Hopf axioms for formal j, and for nilpotent j the contracted data.
VerifyReport verify_spec(const GroupSpec& spec, const VerifyOptions& opt = {});

}  // namespace ckq
