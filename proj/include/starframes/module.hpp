#pragma once

#include <vector>

#include "starframes/algebra.hpp"

namespace starframes {

// Vector in the free module A^d over the block algebra. Left action
// (a.xi)_i = a*xi_i, inner product <xi,eta> = sum_i xi_i eta_i^*.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(AlgebraShape shape, std::vector<AlgebraElement> components);

  static ModuleVector zero(const AlgebraShape& shape, int dim);
  // e_i * 1_A
  static ModuleVector basis(const AlgebraShape& shape, int dim, int index);
  static ModuleVector random(const AlgebraShape& shape, int dim, Rng& rng);

  const AlgebraShape& shape() const { return shape_; }
  int dim() const { return static_cast<int>(components_.size()); }
  const AlgebraElement& component(int i) const;

  ModuleVector operator+(const ModuleVector& rhs) const;
  ModuleVector operator-(const ModuleVector& rhs) const;
  ModuleVector operator*(Complex c) const;

  AlgebraElement inner(const ModuleVector& rhs) const;
  // sqrt(p_k(<xi,xi>)) = operator norm of the realization stack.
  double seminorm(int k) const;
  double norm_inf() const;
  bool is_zero(double tol = kDefaultTol) const;

  // Complex realization of block k: the (d*n_k) x n_k stack of the
  // components' conjugate-transposed blocks. Realized vectors transform by
  // left multiplication with the operator realization below, and
  // <xi,eta>_k = realize_block(xi,k)^adj * realize_block(eta,k).
  Matrix realize_block(int k) const;
  static ModuleVector unrealize(const AlgebraShape& shape, int dim,
                                const std::vector<Matrix>& blocks);

 private:
  AlgebraShape shape_;
  std::vector<AlgebraElement> components_;
};

ModuleVector scalar_action(const AlgebraElement& a, const ModuleVector& x);

struct OperatorNorms {
  std::vector<double> per_block;  // p-hat_k = sigma_max of realization block k
  double norm_inf = 0.0;          // max_k p-hat_k
  double min_modulus = 0.0;       // min_k sigma_min; 0 signals non-invertibility
};

// Adjointable operator on A^d as a d x d matrix over A, acting on the right
// of row vectors: (T xi)_j = sum_i xi_i M_ij. The right action is what
// commutes with the left scalar action, so T is automatically A-linear.
class ModuleOperator {
 public:
  ModuleOperator() = default;
  ModuleOperator(AlgebraShape shape, int dim, std::vector<AlgebraElement> entries);

  static ModuleOperator zero(const AlgebraShape& shape, int dim);
  static ModuleOperator identity(const AlgebraShape& shape, int dim);
  static ModuleOperator scalar(const AlgebraShape& shape, int dim, Complex c);
  static ModuleOperator random(const AlgebraShape& shape, int dim, Rng& rng);

  const AlgebraShape& shape() const { return shape_; }
  int dim() const { return dim_; }
  // M_ij: row i, column j.
  const AlgebraElement& entry(int i, int j) const;

  ModuleOperator operator+(const ModuleOperator& rhs) const;
  ModuleOperator operator-(const ModuleOperator& rhs) const;
  ModuleOperator operator*(Complex c) const;

  ModuleVector apply(const ModuleVector& x) const;
  ModuleOperator adjoint() const;

  // Realization block k: the (d*n_k) x (d*n_k) complex matrix with
  // (j,i)-block adj(M_ij block k). The map T -> realize(T) is a
  // *-isomorphism M_d(A) ~ (+)_k M_{d n_k}(C): it turns composition into
  // matrix product, adjoint into conjugate transpose, and the module action
  // into left multiplication of realized vectors.
  Matrix realize(int k) const;
  std::vector<Matrix> realize_all() const;
  static ModuleOperator unrealize(const AlgebraShape& shape, int dim,
                                  const std::vector<Matrix>& blocks);

  OperatorNorms norms() const;
  bool is_self_adjoint(double tol = kDefaultTol) const;
  // Realization blocks Hermitian and PSD within scale-relative tolerance.
  bool is_positive(double tol = kDefaultTol) const;
  // Blockwise inversion of the realization. min_modulus must exceed tol.
  ModuleOperator inverse(double tol = kDefaultTol) const;
  // Spectral calculus through the realization; requires positivity.
  ModuleOperator func_calc(MatrixFunction f, double tol = kDefaultTol) const;

  bool approx_equal(const ModuleOperator& rhs, double tol) const;

 private:
  AlgebraShape shape_;
  int dim_ = 0;
  std::vector<AlgebraElement> entries_;  // row-major d x d
};

// S applied after T: compose(S, T)(xi) = S(T(xi)). With the right-action
// convention the matrix of the composite is mat(T) * mat(S).
ModuleOperator compose(const ModuleOperator& s, const ModuleOperator& t);

}  // namespace starframes
