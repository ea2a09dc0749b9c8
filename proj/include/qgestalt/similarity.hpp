#pragma once

#include "qgestalt/density.hpp"
#include "qgestalt/state.hpp"

namespace qgestalt {

// Floating-point excess accepted above 1 before fidelity is declared broken.
inline constexpr double kFidelityClampSlack = 1e-9;

// Boundary slack of the similarity relation: r counts as met when the
// fidelity reaches it within the library's state-identity tolerance. Exact
// r <= F cannot hold at the boundary in floating point (F(rho,rho) rounds to
// 1 - few ulps), so equality is honored within 1e-12.
inline constexpr double kSimilarityEps = 1e-12;

inline bool meets_threshold(double fidelity_value, double r) {
  return r <= fidelity_value + kSimilarityEps;
}

// Similarity threshold r in [0,1]. Classifier-grade thresholds additionally
// require r > 1/2; that stricter check lives with the classifier operations.
class SimilarityThreshold {
public:
  explicit SimilarityThreshold(double r);

  double value() const { return r_; }

private:
  double r_;
};

// |<psi|phi>|^2, the squared overlap of two pure states. Symmetric, in [0,1].
double fidelity_pure(const PureState& psi, const PureState& phi);

// Raw fidelity between density operators before range validation/clamping:
// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Exposed for range audits.
double fidelity_unclamped(const DensityOperator& rho, const DensityOperator& sigma);

// Uhlmann fidelity between density operators, clamped to [0,1]. Chosen as the
// mixed-state extension because it provably keeps all four properties of the
// pure overlap (range, symmetry, F = 0 iff the operator product is null,
// F = 1 iff equal) and reduces to fidelity_pure on rank-1 inputs: for
// projectors the cross operator sqrt(P_phi) sqrt(P_psi) = |phi><phi|psi><psi|
// has the single singular value |<phi|psi>|, so the squared nuclear norm is
// exactly the squared overlap. Values beyond 1 + kFidelityClampSlack raise
// internal_consistency_error instead of being clamped silently.
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

// True iff r <= fidelity(rho, sigma). Reflexive and symmetric; generally
// non-transitive.
bool r_similar(const DensityOperator& rho, const DensityOperator& sigma,
               SimilarityThreshold r);

}  // namespace qgestalt
