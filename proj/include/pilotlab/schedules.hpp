#pragma once

#include <cstdint>
#include <string>

#include "pilotlab/numerics.hpp"

namespace pilotlab {

enum class ScheduleKind {
  kConstant,
  kHarmonic,   // alpha0 / k
  kQuadratic,  // alpha0 / k^2
  kGeometric,  // alpha0 * p^k
  kAdaptivePilot,
};

struct ScheduleSpec {
  ScheduleKind kind = ScheduleKind::kConstant;
  double alpha0 = 0.0;
  double p = 0.95;          // geometric decay base, must lie in (0, 1)
  double delta = 1.0;       // adaptive multiplier, >= 1
  double K = 0.0;           // adaptive L1 sparsity threshold, > 0
  std::uint64_t T = 0;      // adaptive horizon; growth allowed while k <= T/2

  void validate() const;    // throws std::invalid_argument naming the field
  std::string label() const;
};

// Mutable state of one adaptive controller (one per training run).
struct ControllerState {
  double alpha = 0.0;
  double A = 0.0;           // discrete surrogate of the integral of alpha
  double best_metric = 0.0; // previous training loss
  std::uint64_t step = 0;
};

// Fixed-schedule strength at step k >= 1. Rejects k == 0 and adaptive specs.
double alpha_at(const ScheduleSpec& spec, std::uint64_t k);

// Continuous extension alpha(t) sampled at step index s = t / eta_base, used
// when a run is re-discretized at a finer step against the same schedule.
// Decaying kinds flat-start below s = 1 so the base grid reproduces alpha_at.
double alpha_at_time(const ScheduleSpec& spec, double t, double eta_base);

// One adaptive update: grow by delta while the metric improved, the L1 norm
// is still above K, and k <= T/2; decay by delta otherwise. Returns alpha_k.
double pilot_update(ControllerState& state, const ScheduleSpec& spec,
                    bool metric_improved, double l1_norm, std::uint64_t k);

// A <- A + eta * alpha_k (step k maps to flow time t = k eta). Returns new A.
double accumulate(ControllerState& state, double alpha_k, double eta);

// Elementwise (m0^2 - w0^2) exp(-2A).
Vec scale_a(const Vec& m0, const Vec& w0, double A);

}  // namespace pilotlab
