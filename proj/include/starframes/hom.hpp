#pragma once

#include <vector>

#include "starframes/algebra.hpp"

namespace starframes {

// *-homomorphism between block algebras in finite-dimensional normal form:
// for each target block j,
//   phi(a)_j = U_j * diag(a_0 x mult[0], ..., a_{m-1} x mult[m-1], 0 pad) * U_j^*,
// with copies laid out source-block-ascending and the zero padding at the end.
class StarHomomorphism {
 public:
  struct TargetBlock {
    std::vector<int> multiplicities;  // one count per source block
    Matrix unitary;                   // n'_j x n'_j
  };

  StarHomomorphism(AlgebraShape source, AlgebraShape target, std::vector<TargetBlock> blocks);

  static StarHomomorphism identity(const AlgebraShape& shape);
  // a -> U a U^* blockwise; one unitary per block.
  static StarHomomorphism unitary_conjugation(const AlgebraShape& shape,
                                              std::vector<Matrix> unitaries);
  // a -> a (+) a onto the doubled block list [n_1..n_m, n_1..n_m].
  static StarHomomorphism amplification(const AlgebraShape& shape);
  // a -> a (+) 0 onto [n_1..n_m, extra...]; the extra blocks receive zero.
  static StarHomomorphism block_embedding(const AlgebraShape& shape,
                                          const std::vector<int>& extra_blocks);
  // outer after inner; the result is again in normal form.
  static StarHomomorphism compose(const StarHomomorphism& outer, const StarHomomorphism& inner);

  const AlgebraShape& source_shape() const { return source_; }
  const AlgebraShape& target_shape() const { return target_; }
  const std::vector<TargetBlock>& target_blocks() const { return blocks_; }

  AlgebraElement apply(const AlgebraElement& x) const;

  bool is_unital(double tol = kDefaultTol) const;
  // Image equals the whole target: every target block is a single full copy.
  bool is_surjective() const;
  // Every target block is a single full copy of one source block, or zero.
  // This is the class under which frame transport keeps the bound
  // inequalities valid on the whole target module.
  bool is_block_regular() const;

 private:
  AlgebraShape source_;
  AlgebraShape target_;
  std::vector<TargetBlock> blocks_;
};

}  // namespace starframes
