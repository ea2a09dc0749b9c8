#include "qgestalt/state.hpp"

#include <cmath>

namespace qgestalt {

namespace {

void require_finite(const Eigen::VectorXd& values) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values(i))) {
      throw invalid_feature_error("feature " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

FeatureVector::FeatureVector(Eigen::VectorXd values) : values_(std::move(values)) {
  if (values_.size() < 1) {
    throw invalid_feature_error("feature vector must have at least one component");
  }
  require_finite(values_);
}

FeatureVector::FeatureVector(const std::vector<double>& values)
    : FeatureVector(Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                      static_cast<Eigen::Index>(values.size()))) {}

FeatureVector::FeatureVector(std::initializer_list<double> values)
    : FeatureVector(std::vector<double>(values)) {}

PureState::PureState(Eigen::VectorXd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw error("pure state needs dimension >= 2, got " +
                std::to_string(amplitudes_.size()));
  }
  require_finite(amplitudes_);
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw error("pure state norm is " + std::to_string(norm) + ", expected 1");
  }
}

PureState PureState::basis(Eigen::Index dimension, Eigen::Index index) {
  if (dimension < 2 || index < 0 || index >= dimension) {
    throw error("basis state index out of range");
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension);
  v(index) = 1.0;
  return PureState(std::move(v));
}

PureState PureState::normalized(Eigen::VectorXd v) {
  require_finite(v);
  const double norm = v.norm();
  if (norm < 1e-12) {
    throw error("cannot normalize a (near-)zero vector");
  }
  return PureState(v / norm);
}

bool PureState::approx_equal(const PureState& other, double tol) const {
  if (dimension() != other.dimension()) return false;
  return (amplitudes_ - other.amplitudes_).cwiseAbs().maxCoeff() <= tol;
}

PureState amplitude_encode(const FeatureVector& x) {
  const Eigen::Index d = x.dimension();
  Eigen::VectorXd extended(d + 1);
  extended.head(d) = x.values();
  extended(d) = 1.0;
  // The appended 1 guarantees a nonzero norm for every finite x.
  return PureState(extended / extended.norm());
}

FeatureVector decode_features(const PureState& psi) {
  const Eigen::Index d = psi.dimension() - 1;
  const double last = psi[d];
  if (last <= 1e-12) {
    throw not_an_encoding_error(
        "last amplitude is " + std::to_string(last) +
        "; state is not an amplitude encoding of a feature vector");
  }
  return FeatureVector(psi.amplitudes().head(d) / last);
}

}  // namespace qgestalt
