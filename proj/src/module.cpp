#include "starframes/module.hpp"

#include <limits>
#include <utility>

namespace starframes {

namespace {

void require_compatible(const ModuleVector& x, const ModuleVector& y) {
  if (!(x.shape() == y.shape()) || x.dim() != y.dim())
    throw std::invalid_argument("module vectors have mismatched shape or dimension");
}

void require_compatible(const ModuleOperator& s, const ModuleOperator& t) {
  if (!(s.shape() == t.shape()) || s.dim() != t.dim())
    throw std::invalid_argument("module operators have mismatched shape or dimension");
}

}  // namespace

ModuleVector::ModuleVector(AlgebraShape shape, std::vector<AlgebraElement> components)
    : shape_(std::move(shape)), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("module vector needs dimension >= 1");
  for (const AlgebraElement& c : components_)
    if (!(c.shape() == shape_))
      throw std::invalid_argument("module vector component has the wrong shape");
}

ModuleVector ModuleVector::zero(const AlgebraShape& shape, int dim) {
  if (dim < 1) throw std::invalid_argument("module dimension must be >= 1");
  return ModuleVector(shape, std::vector<AlgebraElement>(dim, AlgebraElement::zero(shape)));
}

ModuleVector ModuleVector::basis(const AlgebraShape& shape, int dim, int index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis index out of range");
  ModuleVector v = zero(shape, dim);
  v.components_[index] = AlgebraElement::identity(shape);
  return v;
}

ModuleVector ModuleVector::random(const AlgebraShape& shape, int dim, Rng& rng) {
  std::vector<AlgebraElement> comps;
  comps.reserve(dim);
  for (int i = 0; i < dim; ++i) comps.push_back(AlgebraElement::random(shape, rng));
  return ModuleVector(shape, std::move(comps));
}

const AlgebraElement& ModuleVector::component(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("component index out of range");
  return components_[static_cast<std::size_t>(i)];
}

ModuleVector ModuleVector::operator+(const ModuleVector& rhs) const {
  require_compatible(*this, rhs);
  std::vector<AlgebraElement> comps;
  comps.reserve(components_.size());
  for (int i = 0; i < dim(); ++i) comps.push_back(components_[i] + rhs.components_[i]);
  return ModuleVector(shape_, std::move(comps));
}

ModuleVector ModuleVector::operator-(const ModuleVector& rhs) const {
  require_compatible(*this, rhs);
  std::vector<AlgebraElement> comps;
  comps.reserve(components_.size());
  for (int i = 0; i < dim(); ++i) comps.push_back(components_[i] - rhs.components_[i]);
  return ModuleVector(shape_, std::move(comps));
}

ModuleVector ModuleVector::operator*(Complex c) const {
  std::vector<AlgebraElement> comps;
  comps.reserve(components_.size());
  for (const AlgebraElement& x : components_) comps.push_back(x * c);
  return ModuleVector(shape_, std::move(comps));
}

AlgebraElement ModuleVector::inner(const ModuleVector& rhs) const {
  require_compatible(*this, rhs);
  AlgebraElement acc = AlgebraElement::zero(shape_);
  for (int i = 0; i < dim(); ++i) acc = acc + components_[i] * rhs.components_[i].adjoint();
  return acc;
}

double ModuleVector::seminorm(int k) const {
  Eigen::JacobiSVD<Matrix> svd(realize_block(k));
  return svd.singularValues()(0);
}

double ModuleVector::norm_inf() const {
  double m = 0.0;
  for (int k = 0; k < shape_.block_count(); ++k) m = std::max(m, seminorm(k));
  return m;
}

bool ModuleVector::is_zero(double tol) const {
  for (const AlgebraElement& c : components_)
    if (!c.is_zero(tol)) return false;
  return true;
}

Matrix ModuleVector::realize_block(int k) const {
  const int n = shape_.dim(k);
  Matrix out(dim() * n, n);
  for (int i = 0; i < dim(); ++i)
    out.block(i * n, 0, n, n) = components_[i].block(k).adjoint();
  return out;
}

ModuleVector ModuleVector::unrealize(const AlgebraShape& shape, int dim,
                                     const std::vector<Matrix>& blocks) {
  if (static_cast<int>(blocks.size()) != shape.block_count())
    throw std::invalid_argument("unrealize: one block per seminorm index required");
  std::vector<AlgebraElement> comps;
  comps.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    std::vector<Matrix> elem;
    elem.reserve(blocks.size());
    for (int k = 0; k < shape.block_count(); ++k) {
      const int n = shape.dim(k);
      if (blocks[k].rows() != static_cast<Eigen::Index>(dim) * n || blocks[k].cols() != n)
        throw std::invalid_argument("unrealize: block " + std::to_string(k) +
                                    " has the wrong size");
      elem.push_back(blocks[k].block(i * n, 0, n, n).adjoint());
    }
    comps.emplace_back(shape, std::move(elem));
  }
  return ModuleVector(shape, std::move(comps));
}

ModuleVector scalar_action(const AlgebraElement& a, const ModuleVector& x) {
  if (!(a.shape() == x.shape()))
    throw std::invalid_argument("scalar action: shapes do not match");
  std::vector<AlgebraElement> comps;
  comps.reserve(x.dim());
  for (int i = 0; i < x.dim(); ++i) comps.push_back(a * x.component(i));
  return ModuleVector(x.shape(), std::move(comps));
}

ModuleOperator::ModuleOperator(AlgebraShape shape, int dim, std::vector<AlgebraElement> entries)
    : shape_(std::move(shape)), dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) throw std::invalid_argument("module dimension must be >= 1");
  if (static_cast<int>(entries_.size()) != dim_ * dim_)
    throw std::invalid_argument("operator needs d*d entries");
  for (const AlgebraElement& e : entries_)
    if (!(e.shape() == shape_))
      throw std::invalid_argument("operator entry has the wrong shape");
}

ModuleOperator ModuleOperator::zero(const AlgebraShape& shape, int dim) {
  if (dim < 1) throw std::invalid_argument("module dimension must be >= 1");
  return ModuleOperator(shape, dim,
                        std::vector<AlgebraElement>(dim * dim, AlgebraElement::zero(shape)));
}

ModuleOperator ModuleOperator::identity(const AlgebraShape& shape, int dim) {
  return scalar(shape, dim, Complex(1.0, 0.0));
}

ModuleOperator ModuleOperator::scalar(const AlgebraShape& shape, int dim, Complex c) {
  ModuleOperator t = zero(shape, dim);
  for (int i = 0; i < dim; ++i) t.entries_[i * dim + i] = AlgebraElement::scalar(shape, c);
  return t;
}

ModuleOperator ModuleOperator::random(const AlgebraShape& shape, int dim, Rng& rng) {
  std::vector<AlgebraElement> entries;
  entries.reserve(dim * dim);
  for (int i = 0; i < dim * dim; ++i) entries.push_back(AlgebraElement::random(shape, rng));
  return ModuleOperator(shape, dim, std::move(entries));
}

const AlgebraElement& ModuleOperator::entry(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::out_of_range("operator entry index out of range");
  return entries_[static_cast<std::size_t>(i) * dim_ + j];
}

ModuleOperator ModuleOperator::operator+(const ModuleOperator& rhs) const {
  require_compatible(*this, rhs);
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries.push_back(entries_[i] + rhs.entries_[i]);
  return ModuleOperator(shape_, dim_, std::move(entries));
}

ModuleOperator ModuleOperator::operator-(const ModuleOperator& rhs) const {
  require_compatible(*this, rhs);
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries.push_back(entries_[i] - rhs.entries_[i]);
  return ModuleOperator(shape_, dim_, std::move(entries));
}

ModuleOperator ModuleOperator::operator*(Complex c) const {
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (const AlgebraElement& e : entries_) entries.push_back(e * c);
  return ModuleOperator(shape_, dim_, std::move(entries));
}

ModuleVector ModuleOperator::apply(const ModuleVector& x) const {
  if (!(x.shape() == shape_) || x.dim() != dim_)
    throw std::invalid_argument("operator applied to an incompatible vector");
  std::vector<AlgebraElement> comps;
  comps.reserve(dim_);
  for (int j = 0; j < dim_; ++j) {
    AlgebraElement acc = AlgebraElement::zero(shape_);
    for (int i = 0; i < dim_; ++i) acc = acc + x.component(i) * entry(i, j);
    comps.push_back(std::move(acc));
  }
  return ModuleVector(shape_, std::move(comps));
}

ModuleOperator ModuleOperator::adjoint() const {
  std::vector<AlgebraElement> entries;
  entries.reserve(entries_.size());
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) entries.push_back(entry(j, i).adjoint());
  return ModuleOperator(shape_, dim_, std::move(entries));
}

Matrix ModuleOperator::realize(int k) const {
  const int n = shape_.dim(k);
  Matrix out(dim_ * n, dim_ * n);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i)
      out.block(j * n, i * n, n, n) = entry(i, j).block(k).adjoint();
  return out;
}

std::vector<Matrix> ModuleOperator::realize_all() const {
  std::vector<Matrix> out;
  out.reserve(shape_.block_count());
  for (int k = 0; k < shape_.block_count(); ++k) out.push_back(realize(k));
  return out;
}

ModuleOperator ModuleOperator::unrealize(const AlgebraShape& shape, int dim,
                                         const std::vector<Matrix>& blocks) {
  if (static_cast<int>(blocks.size()) != shape.block_count())
    throw std::invalid_argument("unrealize: one block per seminorm index required");
  for (int k = 0; k < shape.block_count(); ++k) {
    const Eigen::Index expected = static_cast<Eigen::Index>(dim) * shape.dim(k);
    if (blocks[k].rows() != expected || blocks[k].cols() != expected)
      throw std::invalid_argument("unrealize: block " + std::to_string(k) +
                                  " has the wrong size");
  }
  std::vector<AlgebraElement> entries;
  entries.reserve(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::vector<Matrix> elem;
      elem.reserve(blocks.size());
      for (int k = 0; k < shape.block_count(); ++k) {
        const int n = shape.dim(k);
        elem.push_back(blocks[k].block(j * n, i * n, n, n).adjoint());
      }
      entries.emplace_back(shape, std::move(elem));
    }
  return ModuleOperator(shape, dim, std::move(entries));
}

OperatorNorms ModuleOperator::norms() const {
  OperatorNorms out;
  out.min_modulus = std::numeric_limits<double>::infinity();
  for (int k = 0; k < shape_.block_count(); ++k) {
    Eigen::JacobiSVD<Matrix> svd(realize(k));
    const auto& sv = svd.singularValues();
    out.per_block.push_back(sv(0));
    out.norm_inf = std::max(out.norm_inf, sv(0));
    out.min_modulus = std::min(out.min_modulus, sv(sv.size() - 1));
  }
  return out;
}

bool ModuleOperator::is_self_adjoint(double tol) const {
  return approx_equal(adjoint(), tol * (1.0 + norms().norm_inf));
}

bool ModuleOperator::is_positive(double tol) const {
  for (int k = 0; k < shape_.block_count(); ++k) {
    const Matrix r = realize(k);
    const double scale = 1.0 + r.norm();
    if ((r - r.adjoint()).norm() > tol * scale) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (r + r.adjoint())),
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -tol * scale) return false;
  }
  return true;
}

ModuleOperator ModuleOperator::inverse(double tol) const {
  const OperatorNorms n = norms();
  if (!(n.min_modulus > tol))
    throw SingularityError("operator is not invertible at the requested tolerance",
                           n.min_modulus);
  std::vector<Matrix> inv_blocks;
  inv_blocks.reserve(shape_.block_count());
  for (const Matrix& r : realize_all())
    inv_blocks.push_back(r.partialPivLu().inverse());
  return unrealize(shape_, dim_, inv_blocks);
}

ModuleOperator ModuleOperator::func_calc(MatrixFunction f, double tol) const {
  std::vector<Matrix> out;
  out.reserve(shape_.block_count());
  for (int k = 0; k < shape_.block_count(); ++k) {
    const Matrix r = realize(k);
    const double scale = 1.0 + r.norm();
    if ((r - r.adjoint()).norm() > tol * scale)
      throw std::domain_error("operator functional calculus on a non-self-adjoint operator");
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (r + r.adjoint())));
    RealVector vals = es.eigenvalues();
    if (vals(0) < -tol * scale)
      throw std::domain_error("operator functional calculus on a non-positive operator");
    if (f != MatrixFunction::Sqrt && vals(0) <= tol)
      throw SingularityError("operator inverse functional calculus near a singular spectrum",
                             vals(0));
    for (int i = 0; i < vals.size(); ++i) {
      const double v = std::max(vals(i), 0.0);
      switch (f) {
        case MatrixFunction::Sqrt: vals(i) = std::sqrt(v); break;
        case MatrixFunction::Inv: vals(i) = 1.0 / v; break;
        case MatrixFunction::InvSqrt: vals(i) = 1.0 / std::sqrt(v); break;
      }
    }
    out.push_back(es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint());
  }
  return unrealize(shape_, dim_, out);
}

bool ModuleOperator::approx_equal(const ModuleOperator& rhs, double tol) const {
  if (!(shape_ == rhs.shape_) || dim_ != rhs.dim_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if ((entries_[i] - rhs.entries_[i]).norm_inf() > tol) return false;
  return true;
}

ModuleOperator compose(const ModuleOperator& s, const ModuleOperator& t) {
  require_compatible(s, t);
  const int d = s.dim();
  std::vector<AlgebraElement> entries;
  entries.reserve(d * d);
  // mat(S after T) = mat(T) * mat(S)
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) {
      AlgebraElement acc = AlgebraElement::zero(s.shape());
      for (int j = 0; j < d; ++j) acc = acc + t.entry(i, j) * s.entry(j, l);
      entries.push_back(std::move(acc));
    }
  return ModuleOperator(s.shape(), d, std::move(entries));
}

}  // namespace starframes
