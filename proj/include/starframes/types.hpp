#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace starframes {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Scale-relative positivity / hermiticity tolerance used as the default
// throughout: an eigenvalue is accepted as nonnegative when it is
// >= -tol * (1 + ||block||).
inline constexpr double kDefaultTol = 1e-9;

// Largest singular value.
inline double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

// Smallest singular value.
inline double smallest_singular(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

// Raised when an inversion-like operation meets a spectrum too close to zero.
// Carries the offending smallest modulus so callers can report it.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double min_modulus)
      : std::runtime_error(what + " (min modulus " + std::to_string(min_modulus) + ")"),
        min_modulus_(min_modulus) {}

  double min_modulus() const { return min_modulus_; }

 private:
  double min_modulus_;
};

}  // namespace starframes
