#pragma once

#include <Eigen/Core>
#include <vector>

#include "qgestalt/errors.hpp"

namespace qgestalt {

// Norm slack accepted when validating a unit vector.
inline constexpr double kNormTol = 1e-10;

// Amplitude-wise tolerance under which two states count as the same state
// (the equality used by data-set disjointness).
inline constexpr double kStateEqTol = 1e-12;

// Classical object-state: an ordered list of real-valued features x_1..x_d.
class FeatureVector {
public:
  // Requires d >= 1 and all entries finite.
  explicit FeatureVector(Eigen::VectorXd values);
  explicit FeatureVector(const std::vector<double>& values);
  FeatureVector(std::initializer_list<double> values);

  Eigen::Index dimension() const { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_(i); }
  const Eigen::VectorXd& values() const { return values_; }

private:
  Eigen::VectorXd values_;
};

// Unit vector in a finite-dimensional real Hilbert space.
class PureState {
public:
  // Requires dimension >= 2 and Euclidean norm 1 within kNormTol.
  explicit PureState(Eigen::VectorXd amplitudes);

  // Basis state with a single 1 at `index`: basis(2,0) = |0>, basis(2,1) = |1>.
  static PureState basis(Eigen::Index dimension, Eigen::Index index);

  // v / ||v||; rejects vectors with norm below 1e-12.
  static PureState normalized(Eigen::VectorXd v);

  Eigen::Index dimension() const { return amplitudes_.size(); }
  double operator[](Eigen::Index i) const { return amplitudes_(i); }
  const Eigen::VectorXd& amplitudes() const { return amplitudes_; }

  // State identity: max amplitude gap within tol.
  bool approx_equal(const PureState& other, double tol = kStateEqTol) const;

private:
  Eigen::VectorXd amplitudes_;
};

// (x_1,...,x_d) -> (x_1,...,x_d,1)/||(x_1,...,x_d,1)||, a unit vector in
// dimension d+1. Features stay recoverable as x_i = psi_i / psi_{d+1}.
PureState amplitude_encode(const FeatureVector& x);

// Inverse of amplitude_encode on its image. Throws not_an_encoding_error when
// the last amplitude is <= 1e-12 (the state is not an encoded feature vector).
FeatureVector decode_features(const PureState& psi);

}  // namespace qgestalt
