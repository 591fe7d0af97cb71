#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pilotlab/numerics.hpp"

namespace pilotlab {

// One recorded observation. `time` = step * eta; `A` is the accumulated
// integral of alpha up to and including this step. `mirror_residual` is only
// filled when the run tracks the mirror identity.
struct TraceRecord {
  std::uint64_t step = 0;
  double time = 0.0;
  double loss = 0.0;
  double dist_to_truth = 0.0;
  double l1 = 0.0;
  double sparsity = 0.0;
  double alpha = 0.0;
  double A = 0.0;
  std::optional<double> mirror_residual;
};

struct Trace {
  std::vector<TraceRecord> records;
  std::vector<Vec> xs;          // x snapshot per record
  std::vector<int> sign_flips;  // per coordinate, counted at every step
  bool diverged = false;

  // Final state; m/w (and the initial pair) are empty for methods without a
  // lifted parameterization.
  Vec x_final;
  Vec m_final, w_final;
  Vec m0, w0;
  double final_A = 0.0;
  double final_alpha = 0.0;

  // Largest pointwise mirror residual seen at recorded steps (0 when the run
  // does not track it).
  double mirror_residual_sup = 0.0;
};

}  // namespace pilotlab
