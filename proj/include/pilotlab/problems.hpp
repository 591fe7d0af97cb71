#pragma once

#include <cstdint>
#include <string>

#include "pilotlab/numerics.hpp"

namespace pilotlab {

// Underdetermined sparse regression instance: Z is d x n with n > d,
// Y = Z x_star (+ noise), x_star has exactly `support` nonzero entries.
struct RegressionProblem {
  Matrix Z;
  Vec Y;
  Vec x_star;
  std::size_t d = 0;
  std::size_t n = 0;
  double noise = 0.0;
};

// Rows z_j ~ N(0, I_n); support chosen by partial Fisher-Yates shuffle;
// nonzero magnitudes uniform in [0.5, 1.5] with random sign. Throws when
// n <= d or k is out of range.
RegressionProblem gen_underdetermined(std::uint64_t seed, std::size_t n,
                                      std::size_t d, std::size_t k,
                                      double noise);

// (1 / (2d)) ||Z x - Y||^2
double mse_loss(const RegressionProblem& problem, const Vec& x);

// (1 / d) Z^T (Z x - Y)
Vec grad_mse(const RegressionProblem& problem, const Vec& x);

struct PlConstant {
  double lambda = 0.0;   // sigma_min_nonzero(Z)^2 / d
  bool certified = true; // false for noisy instances (Y may leave range(Z))
};

// Constant lambda in  ||grad f(x)||^2 >= lambda (f(x) - f(x*))  for the
// pinned loss normalization.
PlConstant pl_constant(const RegressionProblem& problem);

// CSV bundle (Z.csv, Y.csv, xstar.csv) for cross-implementation checks.
void write_problem_csv(const RegressionProblem& problem, const std::string& dir);
RegressionProblem read_problem_csv(const std::string& dir);

}  // namespace pilotlab
