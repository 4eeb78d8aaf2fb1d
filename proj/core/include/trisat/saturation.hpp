#pragma once

#include <vector>

#include "trisat/rootsys.hpp"
#include "trisat/triple.hpp"
#include "trisat/verdict.hpp"

namespace trisat {

/// Chain of types A1 = H_0 < H_1 < ... < G through which the principal
/// representation is deformed, one maximal subgroup at a time.
struct LadderPath {
  std::vector<DynkinType> rungs;
};

/// Throws std::invalid_argument for A1, which has no ladder.
LadderPath classify_ladder(const DynkinType& type);

/// Walks the ladder comparing principal H^1 values rung by rung (A1
/// contributes 0). Saturated iff every step strictly increases; otherwise
/// Unknown. Walks through B3 are Unknown when b = 3 or (a,c) = (2,5).
Verdict ladder_verdict(const DynkinType& type, const Triple& triple);

struct DecideOptions {
  /// Also run a generation search in Alt_m when the pair is not a
  /// built-in table row (only for m <= kMaxAltSearchDegree).
  bool alt_search = false;
};

inline constexpr int kMaxAltSearchDegree = 12;

/// Runs ladder, then bibi (D_r), then the alternating method (B_r, D_r)
/// and returns the first Saturated verdict. If none applies, the result
/// is RigidZero when the principal H^1 vanishes and Unknown otherwise; the
/// certificate then lists what each method reported.
Verdict decide(const DynkinType& type, const Triple& triple, const DecideOptions& options = {});

}  // namespace trisat
