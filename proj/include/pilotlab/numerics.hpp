#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pilotlab {

using Vec = std::vector<double>;

// Dense row-major matrix, sized for desk-scale regression designs (d <= 40 rows).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Deterministic stream: SplitMix64 state advance, 53-bit uniforms, Box-Muller
// normals (trig form, pair-cached). The algorithm is fixed so that identical
// seeds reproduce identical traces everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; never returns 0 so log() is safe.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double next_normal();

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// n i.i.d. draws from Normal(0, scale^2). Throws on n == 0 or scale <= 0.
Vec gaussian_vector(std::uint64_t seed, std::size_t n, double scale);

struct Projection {
  Vec projection;  // component in the span of the rows of Z
  Vec residual;    // component orthogonal to every row of Z
};

// Orthogonal decomposition of v against the row space of Z, via the d x d
// Gram system (Z Z^T + 1e-12 I) c = Z v solved by Cholesky.
Projection row_space_projection(const Matrix& Z, const Vec& v);

// Central differences: component i = (fn(x + h e_i) - fn(x - h e_i)) / (2h).
Vec finite_diff_grad(const std::function<double(const Vec&)>& fn, const Vec& x,
                     double h);

// -- small dense helpers shared across modules --

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm1(const Vec& a);
double norm_inf(const Vec& a);

Vec matvec(const Matrix& Z, const Vec& x);             // Z x
Vec matvec_transpose(const Matrix& Z, const Vec& y);   // Z^T y

// Solves A x = b for symmetric positive definite A (in-place factor).
// Returns false when the factorization breaks down.
bool cholesky_solve(Matrix A, Vec b, Vec& x);

// Singular values of Z in descending order via one-sided Jacobi
// orthogonalization of the d columns of Z^T.
Vec jacobi_singular_values(const Matrix& Z);

// Throws std::runtime_error naming `what` if any entry is NaN/Inf.
void check_finite(const Vec& v, const std::string& what);

}  // namespace pilotlab
