#include "qgestalt/similarity.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace qgestalt {

SimilarityThreshold::SimilarityThreshold(double r) : r_(r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw invalid_threshold_error("threshold " + std::to_string(r) +
                                  " outside [0, 1]");
  }
}

double fidelity_pure(const PureState& psi, const PureState& phi) {
  if (psi.dimension() != phi.dimension()) {
    throw dimension_mismatch_error("fidelity_pure: dimensions " +
                                   std::to_string(psi.dimension()) + " vs " +
                                   std::to_string(phi.dimension()));
  }
  const double overlap = psi.amplitudes().dot(phi.amplitudes());
  return overlap * overlap;
}

double fidelity_unclamped(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dimension() != sigma.dimension()) {
    throw dimension_mismatch_error("fidelity: dimensions " +
                                   std::to_string(rho.dimension()) + " vs " +
                                   std::to_string(sigma.dimension()));
  }
  // tr sqrt(sqrt(rho) sigma sqrt(rho)) equals the nuclear norm of
  // sqrt(sigma) sqrt(rho). Summing singular values avoids square-rooting
  // noise-level eigenvalues, which would otherwise inflate the trace by
  // sqrt(eps) per spurious eigenvalue.
  const Eigen::MatrixXd cross = spectral_sqrt(sigma) * spectral_sqrt(rho);
  const double trace_root =
      Eigen::JacobiSVD<Eigen::MatrixXd>(cross).singularValues().sum();
  return trace_root * trace_root;
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  const double raw = fidelity_unclamped(rho, sigma);
  if (raw > 1.0 + kFidelityClampSlack || raw < -kFidelityClampSlack) {
    throw internal_consistency_error("fidelity " + std::to_string(raw) +
                                     " outside [0, 1] beyond the accepted slack");
  }
  return std::clamp(raw, 0.0, 1.0);
}

bool r_similar(const DensityOperator& rho, const DensityOperator& sigma,
               SimilarityThreshold r) {
  // Boundary equality counts as similar, evaluated on the clamped value.
  return meets_threshold(fidelity(rho, sigma), r.value());
}

}  // namespace qgestalt
