#include "starframes/algebra.hpp"

#include <cmath>
#include <utility>

namespace starframes {

namespace {

void require_same_shape(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.shape() == y.shape()))
    throw std::invalid_argument("algebra elements have mismatched shapes");
}

}  // namespace

AlgebraShape::AlgebraShape(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) throw std::invalid_argument("algebra shape needs at least one block");
  for (int n : dims_)
    if (n < 1) throw std::invalid_argument("algebra block dimensions must be >= 1");
}

int AlgebraShape::dim(int k) const {
  if (k < 0 || k >= block_count()) throw std::out_of_range("seminorm index out of range");
  return dims_[static_cast<std::size_t>(k)];
}

AlgebraElement::AlgebraElement(AlgebraShape shape, std::vector<Matrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != shape_.block_count())
    throw std::invalid_argument("block count does not match shape");
  for (int k = 0; k < shape_.block_count(); ++k) {
    const int n = shape_.dim(k);
    if (blocks_[k].rows() != n || blocks_[k].cols() != n)
      throw std::invalid_argument("block " + std::to_string(k) + " is not " +
                                  std::to_string(n) + "x" + std::to_string(n));
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraShape& shape) {
  std::vector<Matrix> blocks;
  blocks.reserve(shape.block_count());
  for (int k = 0; k < shape.block_count(); ++k)
    blocks.push_back(Matrix::Zero(shape.dim(k), shape.dim(k)));
  return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const AlgebraShape& shape) {
  return scalar(shape, Complex(1.0, 0.0));
}

AlgebraElement AlgebraElement::scalar(const AlgebraShape& shape, Complex value) {
  std::vector<Matrix> blocks;
  blocks.reserve(shape.block_count());
  for (int k = 0; k < shape.block_count(); ++k)
    blocks.push_back(value * Matrix::Identity(shape.dim(k), shape.dim(k)));
  return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::random(const AlgebraShape& shape, Rng& rng) {
  std::vector<Matrix> blocks;
  blocks.reserve(shape.block_count());
  for (int k = 0; k < shape.block_count(); ++k)
    blocks.push_back(rng.gaussian_matrix(shape.dim(k), shape.dim(k)));
  return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::random_positive(const AlgebraShape& shape, Rng& rng) {
  const AlgebraElement x = random(shape, rng);
  return x.adjoint() * x;
}

AlgebraElement AlgebraElement::random_hermitian_with_spectrum(const AlgebraShape& shape,
                                                              double lo, double hi, Rng& rng) {
  if (!(lo <= hi)) throw std::invalid_argument("invalid spectrum range");
  std::vector<Matrix> blocks;
  blocks.reserve(shape.block_count());
  for (int k = 0; k < shape.block_count(); ++k) {
    const int n = shape.dim(k);
    const Matrix u = rng.random_unitary(n);
    RealVector evals(n);
    for (int i = 0; i < n; ++i) evals(i) = rng.uniform(lo, hi);
    blocks.push_back(u * evals.asDiagonal() * u.adjoint());
  }
  return AlgebraElement(shape, std::move(blocks));
}

const Matrix& AlgebraElement::block(int k) const {
  if (k < 0 || k >= block_count()) throw std::out_of_range("block index out of range");
  return blocks_[static_cast<std::size_t>(k)];
}

Matrix& AlgebraElement::block(int k) {
  if (k < 0 || k >= block_count()) throw std::out_of_range("block index out of range");
  return blocks_[static_cast<std::size_t>(k)];
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  require_same_shape(*this, rhs);
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks.push_back(blocks_[k] + rhs.blocks_[k]);
  return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  require_same_shape(*this, rhs);
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks.push_back(blocks_[k] - rhs.blocks_[k]);
  return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  require_same_shape(*this, rhs);
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks.push_back(blocks_[k] * rhs.blocks_[k]);
  return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator-() const { return *this * Complex(-1.0, 0.0); }

AlgebraElement AlgebraElement::operator*(Complex c) const {
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (const Matrix& b : blocks_) blocks.push_back(c * b);
  return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (const Matrix& b : blocks_) blocks.push_back(b.adjoint());
  return AlgebraElement(shape_, std::move(blocks));
}

double AlgebraElement::seminorm(int k) const { return spectral_norm(block(k)); }

double AlgebraElement::norm_inf() const {
  double m = 0.0;
  for (int k = 0; k < block_count(); ++k) m = std::max(m, seminorm(k));
  return m;
}

double AlgebraElement::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Matrix& b : blocks_) m = std::min(m, smallest_singular(b));
  return m;
}

bool AlgebraElement::is_hermitian(double tol) const {
  for (const Matrix& b : blocks_) {
    const double scale = 1.0 + spectral_norm(b);
    if (spectral_norm(Matrix(b - b.adjoint())) > tol * scale) return false;
  }
  return true;
}

bool AlgebraElement::is_positive(double tol) const {
  for (const Matrix& b : blocks_) {
    const double scale = 1.0 + spectral_norm(b);
    if (spectral_norm(Matrix(b - b.adjoint())) > tol * scale) return false;
    const Matrix h = 0.5 * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -tol * scale) return false;
  }
  return true;
}

bool AlgebraElement::is_zero(double tol) const {
  for (const Matrix& b : blocks_)
    if (spectral_norm(b) > tol) return false;
  return true;
}

std::vector<std::vector<Complex>> AlgebraElement::spectrum() const {
  std::vector<std::vector<Complex>> out;
  out.reserve(blocks_.size());
  for (const Matrix& b : blocks_) {
    Eigen::ComplexEigenSolver<Matrix> es(b, false);
    const auto& vals = es.eigenvalues();
    out.emplace_back(vals.data(), vals.data() + vals.size());
  }
  return out;
}

AlgebraElement AlgebraElement::func_calc(MatrixFunction f, double tol) const {
  std::vector<Matrix> blocks;
  blocks.reserve(blocks_.size());
  for (int k = 0; k < block_count(); ++k) {
    const Matrix& b = blocks_[static_cast<std::size_t>(k)];
    const double scale = 1.0 + spectral_norm(b);
    if (spectral_norm(Matrix(b - b.adjoint())) > tol * scale)
      throw std::domain_error("functional calculus on a non-Hermitian block " +
                              std::to_string(k));
    const Matrix h = 0.5 * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    RealVector vals = es.eigenvalues();
    const double min_eig = vals(0);
    if (min_eig < -tol * scale)
      throw std::domain_error("functional calculus on a non-positive block " +
                              std::to_string(k));
    if (f != MatrixFunction::Sqrt && min_eig <= tol)
      throw SingularityError("inverse functional calculus on a near-singular block " +
                                 std::to_string(k),
                             min_eig);
    for (int i = 0; i < vals.size(); ++i) {
      const double v = std::max(vals(i), 0.0);
      switch (f) {
        case MatrixFunction::Sqrt: vals(i) = std::sqrt(v); break;
        case MatrixFunction::Inv: vals(i) = 1.0 / v; break;
        case MatrixFunction::InvSqrt: vals(i) = 1.0 / std::sqrt(v); break;
      }
    }
    blocks.push_back(es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint());
  }
  return AlgebraElement(shape_, std::move(blocks));
}

bool AlgebraElement::approx_equal(const AlgebraElement& rhs, double tol) const {
  if (!(shape_ == rhs.shape_)) return false;
  return (*this - rhs).norm_inf() <= tol;
}

bool order_leq(const AlgebraElement& x, const AlgebraElement& y, double tol) {
  require_same_shape(x, y);
  return (y - x).is_positive(tol);
}

}  // namespace starframes
