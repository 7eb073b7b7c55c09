#include "starframes/hom.hpp"

#include <numeric>
#include <utility>

namespace starframes {

namespace {

int copies_dim(const AlgebraShape& source, const std::vector<int>& mult) {
  int total = 0;
  for (int k = 0; k < source.block_count(); ++k) total += mult[k] * source.dim(k);
  return total;
}

}  // namespace

StarHomomorphism::StarHomomorphism(AlgebraShape source, AlgebraShape target,
                                   std::vector<TargetBlock> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != target_.block_count())
    throw std::invalid_argument("homomorphism needs one descriptor per target block");
  for (int j = 0; j < target_.block_count(); ++j) {
    const TargetBlock& tb = blocks_[j];
    const int nj = target_.dim(j);
    if (static_cast<int>(tb.multiplicities.size()) != source_.block_count())
      throw std::invalid_argument("target block " + std::to_string(j) +
                                  ": multiplicity list does not match source shape");
    for (int m : tb.multiplicities)
      if (m < 0)
        throw std::invalid_argument("target block " + std::to_string(j) +
                                    ": negative multiplicity");
    if (copies_dim(source_, tb.multiplicities) > nj)
      throw std::invalid_argument("target block " + std::to_string(j) +
                                  ": copies exceed the block dimension");
    if (tb.unitary.rows() != nj || tb.unitary.cols() != nj)
      throw std::invalid_argument("target block " + std::to_string(j) + ": unitary is not " +
                                  std::to_string(nj) + "x" + std::to_string(nj));
    const double dev =
        (tb.unitary.adjoint() * tb.unitary - Matrix::Identity(nj, nj)).norm();
    if (dev > 1e-8 * (1.0 + static_cast<double>(nj)))
      throw std::invalid_argument("target block " + std::to_string(j) +
                                  ": conjugator is not unitary");
  }
}

StarHomomorphism StarHomomorphism::identity(const AlgebraShape& shape) {
  std::vector<TargetBlock> blocks;
  for (int j = 0; j < shape.block_count(); ++j) {
    TargetBlock tb;
    tb.multiplicities.assign(shape.block_count(), 0);
    tb.multiplicities[j] = 1;
    tb.unitary = Matrix::Identity(shape.dim(j), shape.dim(j));
    blocks.push_back(std::move(tb));
  }
  return StarHomomorphism(shape, shape, std::move(blocks));
}

StarHomomorphism StarHomomorphism::unitary_conjugation(const AlgebraShape& shape,
                                                        std::vector<Matrix> unitaries) {
  if (static_cast<int>(unitaries.size()) != shape.block_count())
    throw std::invalid_argument("need one unitary per block");
  std::vector<TargetBlock> blocks;
  for (int j = 0; j < shape.block_count(); ++j) {
    TargetBlock tb;
    tb.multiplicities.assign(shape.block_count(), 0);
    tb.multiplicities[j] = 1;
    tb.unitary = std::move(unitaries[j]);
    blocks.push_back(std::move(tb));
  }
  return StarHomomorphism(shape, shape, std::move(blocks));
}

StarHomomorphism StarHomomorphism::amplification(const AlgebraShape& shape) {
  std::vector<int> dims = shape.dims();
  dims.insert(dims.end(), shape.dims().begin(), shape.dims().end());
  const AlgebraShape target(dims);
  std::vector<TargetBlock> blocks;
  for (int j = 0; j < target.block_count(); ++j) {
    TargetBlock tb;
    tb.multiplicities.assign(shape.block_count(), 0);
    tb.multiplicities[j % shape.block_count()] = 1;
    tb.unitary = Matrix::Identity(target.dim(j), target.dim(j));
    blocks.push_back(std::move(tb));
  }
  return StarHomomorphism(shape, target, std::move(blocks));
}

StarHomomorphism StarHomomorphism::block_embedding(const AlgebraShape& shape,
                                                   const std::vector<int>& extra_blocks) {
  std::vector<int> dims = shape.dims();
  dims.insert(dims.end(), extra_blocks.begin(), extra_blocks.end());
  const AlgebraShape target(dims);
  std::vector<TargetBlock> blocks;
  for (int j = 0; j < target.block_count(); ++j) {
    TargetBlock tb;
    tb.multiplicities.assign(shape.block_count(), 0);
    if (j < shape.block_count()) tb.multiplicities[j] = 1;
    tb.unitary = Matrix::Identity(target.dim(j), target.dim(j));
    blocks.push_back(std::move(tb));
  }
  return StarHomomorphism(shape, target, std::move(blocks));
}

StarHomomorphism StarHomomorphism::compose(const StarHomomorphism& outer,
                                           const StarHomomorphism& inner) {
  if (!(inner.target_ == outer.source_))
    throw std::invalid_argument("homomorphism composition: shapes do not chain");
  const AlgebraShape& src = inner.source_;
  const AlgebraShape& mid = outer.source_;
  const AlgebraShape& dst = outer.target_;

  std::vector<TargetBlock> blocks;
  for (int l = 0; l < dst.block_count(); ++l) {
    const TargetBlock& ob = outer.blocks_[l];
    const int nl = dst.dim(l);

    TargetBlock tb;
    tb.multiplicities.assign(src.block_count(), 0);
    for (int j = 0; j < mid.block_count(); ++j)
      for (int k = 0; k < src.block_count(); ++k)
        tb.multiplicities[k] += ob.multiplicities[j] * inner.blocks_[j].multiplicities[k];

    // The composite conjugator: outer unitary, times the inner unitaries laid
    // out along outer's copy slots, times the permutation that regroups the
    // interleaved source copies into normal order (copies of block 0 first,
    // padding last).
    Matrix inner_diag = Matrix::Identity(nl, nl);
    int offset = 0;
    for (int j = 0; j < mid.block_count(); ++j) {
      const int nj = mid.dim(j);
      for (int rep = 0; rep < ob.multiplicities[j]; ++rep) {
        inner_diag.block(offset, offset, nj, nj) = inner.blocks_[j].unitary;
        offset += nj;
      }
    }

    // Row ranges, in composite layout order: (source block k, one copy) and
    // zero rows. normal-form destination offsets per source block.
    std::vector<int> normal_offset(src.block_count() + 1, 0);
    {
      int acc = 0;
      for (int k = 0; k < src.block_count(); ++k) {
        normal_offset[k] = acc;
        acc += tb.multiplicities[k] * src.dim(k);
      }
      normal_offset[src.block_count()] = acc;  // start of the zero rows
    }
    std::vector<int> copies_placed(src.block_count(), 0);
    std::vector<int> perm(nl, -1);  // composite row -> normal-form row
    int zero_cursor = normal_offset[src.block_count()];
    int row = 0;
    for (int j = 0; j < mid.block_count(); ++j) {
      const int nj = mid.dim(j);
      for (int rep = 0; rep < ob.multiplicities[j]; ++rep) {
        const TargetBlock& ib = inner.blocks_[j];
        for (int k = 0; k < src.block_count(); ++k) {
          const int nk = src.dim(k);
          for (int c = 0; c < ib.multiplicities[k]; ++c) {
            const int dest = normal_offset[k] + copies_placed[k] * nk;
            for (int r = 0; r < nk; ++r) perm[row + r] = dest + r;
            ++copies_placed[k];
            row += nk;
          }
        }
        const int pad = nj - copies_dim(src, ib.multiplicities);
        for (int r = 0; r < pad; ++r) perm[row++] = zero_cursor++;
      }
    }
    while (row < nl) perm[row++] = zero_cursor++;  // outer padding

    Matrix p = Matrix::Zero(nl, nl);
    for (int r = 0; r < nl; ++r) p(r, perm[r]) = Complex(1.0, 0.0);

    tb.unitary = ob.unitary * inner_diag * p;
    blocks.push_back(std::move(tb));
  }
  return StarHomomorphism(src, dst, std::move(blocks));
}

AlgebraElement StarHomomorphism::apply(const AlgebraElement& x) const {
  if (!(x.shape() == source_))
    throw std::invalid_argument("homomorphism applied to an element of the wrong shape");
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (int j = 0; j < target_.block_count(); ++j) {
    const TargetBlock& tb = blocks_[j];
    const int nj = target_.dim(j);
    Matrix d = Matrix::Zero(nj, nj);
    int offset = 0;
    for (int k = 0; k < source_.block_count(); ++k) {
      const int nk = source_.dim(k);
      for (int c = 0; c < tb.multiplicities[k]; ++c) {
        d.block(offset, offset, nk, nk) = x.block(k);
        offset += nk;
      }
    }
    out.push_back(tb.unitary * d * tb.unitary.adjoint());
  }
  return AlgebraElement(target_, std::move(out));
}

bool StarHomomorphism::is_unital(double tol) const {
  return apply(AlgebraElement::identity(source_))
      .approx_equal(AlgebraElement::identity(target_), tol);
}

bool StarHomomorphism::is_surjective() const {
  for (int j = 0; j < target_.block_count(); ++j) {
    const TargetBlock& tb = blocks_[j];
    const int total = std::accumulate(tb.multiplicities.begin(), tb.multiplicities.end(), 0);
    if (total != 1 || copies_dim(source_, tb.multiplicities) != target_.dim(j)) return false;
  }
  return true;
}

bool StarHomomorphism::is_block_regular() const {
  for (int j = 0; j < target_.block_count(); ++j) {
    const TargetBlock& tb = blocks_[j];
    const int total = std::accumulate(tb.multiplicities.begin(), tb.multiplicities.end(), 0);
    if (total == 0) continue;  // dead block: phi is zero there
    if (total != 1 || copies_dim(source_, tb.multiplicities) != target_.dim(j)) return false;
  }
  return true;
}

}  // namespace starframes
