#pragma once

#include <Eigen/Core>
#include <vector>

#include "qgestalt/state.hpp"

namespace qgestalt {

// Symmetry / trace slack for density-operator validation.
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

// Eigenvalues in [-kPsdTol, 0) are treated as accumulated floating-point noise
// and repaired to 0; anything below -kPsdTol is a genuine PSD violation.
inline constexpr double kPsdTol = 1e-10;

// Symmetric positive-semidefinite trace-1 matrix; represents a pure or mixed
// state. Construction validates all three invariants.
class DensityOperator {
public:
  explicit DensityOperator(Eigen::MatrixXd matrix);

  Eigen::Index dimension() const { return matrix_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  double trace() const { return matrix_.trace(); }

  bool approx_equal(const DensityOperator& other, double tol = kStateEqTol) const;

private:
  Eigen::MatrixXd matrix_;
};

// Outer product psi psi^T: the rank-1 projector onto the subspace spanned by
// psi. Trace 1, idempotent.
DensityOperator projector(const PureState& psi);

// sum_i w_i * projector(states_i). Weights must be positive, match the state
// list in length, and sum to 1 within kTraceTol.
DensityOperator mixture(const std::vector<PureState>& states,
                        const std::vector<double>& weights);

// Unique PSD square root via spectral decomposition; eigenvalues in
// [-kPsdTol, 0) are clipped to 0. Result satisfies (sqrt(rho))^2 = rho within
// 1e-8 entrywise.
Eigen::MatrixXd spectral_sqrt(const DensityOperator& rho);

}  // namespace qgestalt
