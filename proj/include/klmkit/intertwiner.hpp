#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klmkit/matrix.hpp"

namespace klmkit {

/// Knobs for the probabilistic invertible-witness search. Deterministic for
/// a fixed seed; the trial budget can be overridden with KLMKIT_MAX_TRIALS.
struct WitnessOptions {
  std::uint64_t seed = 0x6b6c6d6b'69743031ULL;
  std::size_t max_trials = 64;

  static WitnessOptions defaults();
};

struct IntertwinerResult {
  std::size_t hom_dim = 0;
  std::vector<ExactMatrix> basis;        // solutions S with S A_g = B_g S
  std::optional<ExactMatrix> witness;    // invertible solution, if found
};

/// Solves S A_g = B_g S for all g over k. hom_dim = 0 certifies that no
/// nonzero intertwiner exists; an absent witness with hom_dim > 0 only
/// means none was found within the trial budget.
IntertwinerResult solve_intertwiners(const std::vector<ExactMatrix>& rep_a,
                                     const std::vector<ExactMatrix>& rep_b,
                                     const WitnessOptions& opts =
                                         WitnessOptions::defaults());

}  // namespace klmkit
