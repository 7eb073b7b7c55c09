#pragma once

#include <cmath>
#include <cstdint>

#include "starframes/types.hpp"

namespace starframes {

// Deterministic random source. splitmix64 core with hand-rolled uniform and
// Box-Muller normal transforms, so streams are bit-identical across
// platforms and standard library versions (std::*_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    // Box-Muller; u clamped away from 0 so the log is finite.
    double u = uniform();
    if (u < 0x1.0p-60) u = 0x1.0p-60;
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  Complex normal_complex() { return Complex(normal(), normal()) / std::sqrt(2.0); }

  Matrix gaussian_matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = normal_complex();
    return m;
  }

  // Haar-ish unitary: QR of a Gaussian matrix with the phase of R's diagonal
  // folded into Q so the result does not depend on QR sign conventions.
  Matrix random_unitary(int n) {
    const Matrix g = gaussian_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      const Complex d = r(i, i);
      const double a = std::abs(d);
      q.col(i) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
  }

 private:
  std::uint64_t state_;
};

}  // namespace starframes
