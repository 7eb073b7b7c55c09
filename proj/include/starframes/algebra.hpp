#pragma once

#include <vector>

#include "starframes/random.hpp"
#include "starframes/types.hpp"

namespace starframes {

// The finite-dimensional algebra model: a direct sum of complex matrix
// blocks M_{n_1} + ... + M_{n_m}. Block k carries the C*-seminorm
// p_k(x) = sigma_max(block k), one seminorm per block.
class AlgebraShape {
 public:
  AlgebraShape() = default;
  explicit AlgebraShape(std::vector<int> block_dims);

  int block_count() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const;
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const AlgebraShape&) const = default;

 private:
  std::vector<int> dims_;
};

enum class MatrixFunction { Sqrt, Inv, InvSqrt };

// One algebra element: a matrix per block. Immutable value semantics; all
// operations return fresh elements.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraShape shape, std::vector<Matrix> blocks);

  static AlgebraElement zero(const AlgebraShape& shape);
  static AlgebraElement identity(const AlgebraShape& shape);
  // value * 1_A
  static AlgebraElement scalar(const AlgebraShape& shape, Complex value);
  // Gaussian entries, seeded.
  static AlgebraElement random(const AlgebraShape& shape, Rng& rng);
  // x*x for a random x: positive by construction.
  static AlgebraElement random_positive(const AlgebraShape& shape, Rng& rng);
  // Hermitian with eigenvalues drawn uniformly from [lo, hi].
  static AlgebraElement random_hermitian_with_spectrum(const AlgebraShape& shape, double lo,
                                                       double hi, Rng& rng);

  const AlgebraShape& shape() const { return shape_; }
  int block_count() const { return shape_.block_count(); }
  const Matrix& block(int k) const;
  Matrix& block(int k);

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(Complex c) const;
  friend AlgebraElement operator*(Complex c, const AlgebraElement& x) { return x * c; }

  // Blockwise conjugate transpose.
  AlgebraElement adjoint() const;

  // p_k: operator norm (largest singular value) of block k.
  double seminorm(int k) const;
  // max_k p_k.
  double norm_inf() const;
  // Smallest singular value across blocks; 0 signals non-invertibility.
  double min_modulus() const;

  bool is_hermitian(double tol = kDefaultTol) const;
  // Hermitian within tolerance and eigenvalues >= -tol*(1+||block||) per block.
  bool is_positive(double tol = kDefaultTol) const;
  bool is_zero(double tol = kDefaultTol) const;

  // Blockwise eigenvalues (general, non-Hermitian path).
  std::vector<std::vector<Complex>> spectrum() const;

  // Spectral calculus on the Hermitian symmetrization. Asymmetry beyond
  // tolerance is a domain error, as is a negative spectrum for Sqrt or a
  // spectrum touching tol for Inv / InvSqrt (SingularityError).
  AlgebraElement func_calc(MatrixFunction f, double tol = kDefaultTol) const;

  bool approx_equal(const AlgebraElement& rhs, double tol) const;

 private:
  AlgebraShape shape_;
  std::vector<Matrix> blocks_;
};

// a <= b in the C*-order: b - a positive.
bool order_leq(const AlgebraElement& x, const AlgebraElement& y, double tol = kDefaultTol);

}  // namespace starframes
