#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "starframes/hom.hpp"
#include "starframes/module.hpp"

namespace starframes {

// Frame bounds: either a scalar pair (a, b) standing for the elements
// sqrt(a)*1_A, sqrt(b)*1_A of the operator-frame embedding, or a pair of
// invertible algebra elements (A, B) for the *-operator-frame inequality
//   A<xi,xi>A* <= sum_i <T_i xi, T_i xi> <= B<xi,xi>B*.
class FrameBounds {
 public:
  static FrameBounds scalar(double lower, double upper);
  // Elements must be invertible (min singular value above tol) and, unless
  // allow_non_positive is set, positive.
  static FrameBounds element(AlgebraElement lower, AlgebraElement upper,
                             double tol = kDefaultTol, bool allow_non_positive = false);

  bool is_scalar() const { return is_scalar_; }
  double scalar_lower() const;
  double scalar_upper() const;
  // The bound elements; scalar bounds materialize as sqrt(c)*1_A.
  AlgebraElement lower_element(const AlgebraShape& shape) const;
  AlgebraElement upper_element(const AlgebraShape& shape) const;

 private:
  FrameBounds() = default;
  bool is_scalar_ = true;
  double lower_ = 0.0, upper_ = 0.0;
  std::optional<AlgebraElement> lower_elem_, upper_elem_;
};

enum class Verdict { Verified, Falsified, Undetermined };
enum class VerifyMethod { ExactPSD, Sampling };
enum class BoundSide { Lower, Upper };

struct SpectralBounds {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::vector<std::pair<double, double>> per_block;
};

struct FrameCertificate {
  Verdict verdict = Verdict::Undetermined;
  VerifyMethod method = VerifyMethod::Sampling;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTol;
  std::optional<ModuleVector> witness;  // present iff Falsified
  BoundSide violated_side = BoundSide::Lower;
  int violating_block = -1;
  SpectralBounds optimal_bounds;
};

// Finite model of l2(X): |I| vectors with the summed inner product.
struct FrameVectorList {
  std::vector<ModuleVector> items;

  AlgebraElement inner(const FrameVectorList& rhs) const;
  double seminorm(int k) const;
};

// A finite family of adjointable operators over one module (shape, d).
class OperatorFrame {
 public:
  explicit OperatorFrame(std::vector<ModuleOperator> operators);

  int count() const { return static_cast<int>(operators_.size()); }
  const ModuleOperator& op(int i) const;
  const std::vector<ModuleOperator>& operators() const { return operators_; }
  const AlgebraShape& shape() const;
  int dim() const;

  // Frame transform R: xi -> {T_i xi}.
  FrameVectorList analysis(const ModuleVector& x) const;
  // R*: {xi_i} -> sum_i T_i^* xi_i.
  ModuleVector synthesis(const FrameVectorList& xs) const;
  // S = R*R = sum_i T_i^* T_i.
  ModuleOperator frame_operator() const;
  // Extremal eigenvalues of realize(S); lambda_min > 0 certifies an
  // operator frame with these scalar bounds.
  SpectralBounds optimal_scalar_bounds() const;
  // p-hat_k(R): largest singular value of the stacked realization
  // [realize(T_0); ...; realize(T_{|I|-1})] -- an independent route to
  // sqrt(lambda_max(S)).
  std::vector<double> analysis_norms() const;

 private:
  std::vector<ModuleOperator> operators_;
};

struct VerifyPolicy {
  int samples = 1000;  // random vectors per seminorm block
  std::uint64_t seed = 0;
  double tolerance = kDefaultTol;
  bool exact_only = false;  // never fall back to sampling
};

// Decide the *-frame inequality. Scalar or central (blockwise-scalar)
// bounds reduce to operator inequalities on realize(S) and get an exact
// verdict. General element bounds are sampled: a violation yields Falsified
// with a replayable witness, no violation yields Undetermined -- sampling
// cannot verify a universal statement.
FrameCertificate verify_bounds(const OperatorFrame& frame, const FrameBounds& bounds,
                               const VerifyPolicy& policy = {});

// Re-evaluate a Falsified certificate's witness from scratch. True when the
// witness still violates the stated side at the certificate's tolerance.
bool replay_witness(const OperatorFrame& frame, const FrameBounds& bounds,
                    const FrameCertificate& cert);

// {T_i S^-1}: the canonical dual; its frame operator is S^-1.
OperatorFrame canonical_dual(const OperatorFrame& frame, double tol = kDefaultTol);
// {T_i S^-1/2}: Parseval normalization; its frame operator is the identity.
OperatorFrame parseval_normalize(const OperatorFrame& frame, double tol = kDefaultTol);

struct ComposeResult {
  OperatorFrame frame;
  std::optional<ModuleOperator> predicted_operator;  // theta* S theta (right case)
  FrameBounds predicted_bounds;
};

// {T_i theta} for invertible theta: frame operator theta* S theta, bounds
// scaled by min_modulus(theta) below and norm_inf(theta) above.
ComposeResult compose_right(const OperatorFrame& frame, const ModuleOperator& theta,
                            const FrameBounds& bounds, double tol = kDefaultTol);
// {theta T_i} for surjective theta; same scaling on the other side.
ComposeResult compose_left(const OperatorFrame& frame, const ModuleOperator& theta,
                           const FrameBounds& bounds, double tol = kDefaultTol);

struct TransportPolicy {
  int samples = 100;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTol;
};

struct TransportReport {
  bool phi_surjective = false;
  bool phi_unital = false;
  bool bounds_invertible = false;
  int identity_samples = 0;
  double identity_max_dev = 0.0;  // max dev of <S_B theta xi, theta eta> = phi(<S_A xi, eta>)
  int bound_samples = 0;
  int bound_falsifications = 0;
  std::uint64_t seed = 0;
  AlgebraElement lower_bound;  // phi(A)
  AlgebraElement upper_bound;  // phi(B)
};

struct TransportResult {
  OperatorFrame frame;
  TransportReport report;
};

// Push a frame along phi: operators map entrywise, the induced module map
// theta applies phi componentwise and satisfies <theta xi, theta eta>_B =
// phi(<xi,eta>_A) by construction. phi must be block-regular (each target
// block a full single copy of a source block, or zero); that is the class
// for which the transported inequalities hold on the whole target module.
TransportResult transport(const OperatorFrame& frame, const StarHomomorphism& phi,
                          const FrameBounds& bounds, const TransportPolicy& policy = {});

// Same, with a caller-supplied twist W on the target module: theta = W o
// theta_phi. The inner-product relation and the commutation theta T_i =
// T_i' theta are checked by sampling; a commutation failure names the
// offending operator index.
TransportResult transport_with(const OperatorFrame& frame, const StarHomomorphism& phi,
                               const ModuleOperator& twist, const FrameBounds& bounds,
                               const TransportPolicy& policy = {});

// Example construction: the d=1 frame over A itself induced by a *-frame
// {xi_i} of A, T_i xi = <xi, xi_i> = xi xi_i^*, with adjoint a -> a xi_i.
OperatorFrame frame_from_star_frame(const std::vector<AlgebraElement>& xs);

// Seeded generator: a frame whose frame operator has realization spectrum
// inside [lo, hi], built by factoring a random positive S with clamped
// spectrum and splitting it across `count` operators.
OperatorFrame random_frame(const AlgebraShape& shape, int dim, int count, double lo, double hi,
                           std::uint64_t seed);

// Deterministic sampling set used by verification: all canonical rank-one
// realization stacks per block, then `samples` seminorm-normalized random
// vectors per block.
std::vector<ModuleVector> sample_vectors(const AlgebraShape& shape, int dim, int samples,
                                         Rng& rng);

}  // namespace starframes
