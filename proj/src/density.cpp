#include "qgestalt/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qgestalt {

namespace {

void require_square_finite(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw error("density operator matrix must be square and nonempty");
  }
  if (!m.allFinite()) {
    throw error("density operator matrix has non-finite entries");
  }
}

}  // namespace

DensityOperator::DensityOperator(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  require_square_finite(matrix_);
  const double asym = (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    throw error("matrix is not symmetric (max asymmetry " + std::to_string(asym) + ")");
  }
  const double tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw error("matrix trace is " + std::to_string(tr) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix_,
                                                        Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw not_psd_error("matrix has eigenvalue " + std::to_string(min_eig) +
                        " below -" + std::to_string(kPsdTol));
  }
}

bool DensityOperator::approx_equal(const DensityOperator& other, double tol) const {
  if (dimension() != other.dimension()) return false;
  return (matrix_ - other.matrix_).cwiseAbs().maxCoeff() <= tol;
}

DensityOperator projector(const PureState& psi) {
  const Eigen::VectorXd& a = psi.amplitudes();
  return DensityOperator(a * a.transpose());
}

DensityOperator mixture(const std::vector<PureState>& states,
                        const std::vector<double>& weights) {
  if (states.empty()) {
    throw empty_mixture_error("mixture over an empty state list");
  }
  if (states.size() != weights.size()) {
    throw invalid_weights_error("got " + std::to_string(weights.size()) +
                                " weights for " + std::to_string(states.size()) +
                                " states");
  }
  const Eigen::Index dim = states.front().dimension();
  double weight_sum = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw invalid_weights_error("weights must be positive and finite");
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > kTraceTol) {
    throw invalid_weights_error("weights sum to " + std::to_string(weight_sum) +
                                ", expected 1");
  }
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dimension() != dim) {
      throw dimension_mismatch_error("mixture state " + std::to_string(i) +
                                     " has dimension " +
                                     std::to_string(states[i].dimension()) +
                                     ", expected " + std::to_string(dim));
    }
    const Eigen::VectorXd& a = states[i].amplitudes();
    acc.noalias() += weights[i] * (a * a.transpose());
  }
  // Accumulation keeps exact symmetry in theory; enforce it against rounding.
  acc = 0.5 * (acc + acc.transpose());
  return DensityOperator(std::move(acc));
}

Eigen::MatrixXd spectral_sqrt(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho.matrix());
  Eigen::VectorXd eigenvalues = solver.eigenvalues();
  // Entries at solver-noise level relative to the spectral ceiling are true
  // zeros; square-rooting them would smear sqrt(eps)-sized components over
  // the result.
  const double cutoff = 1e-13 * std::max(eigenvalues.maxCoeff(), 0.0);
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) < -kPsdTol) {
      throw not_psd_error("eigenvalue " + std::to_string(eigenvalues(i)) +
                          " below -" + std::to_string(kPsdTol));
    }
    eigenvalues(i) = eigenvalues(i) > cutoff ? std::sqrt(eigenvalues(i)) : 0.0;
  }
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  Eigen::MatrixXd root = vectors * eigenvalues.asDiagonal() * vectors.transpose();
  return 0.5 * (root + root.transpose());
}

}  // namespace qgestalt
