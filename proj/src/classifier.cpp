#include "qgestalt/classifier.hpp"

#include <string>

namespace qgestalt {

char to_char(ClassLabel label) {
  switch (label) {
    case ClassLabel::positive: return '+';
    case ClassLabel::negative: return '-';
    case ClassLabel::indeterminate: return '?';
  }
  throw error("unreachable class label");
}

ClassLabel label_from_char(char c) {
  switch (c) {
    case '+': return ClassLabel::positive;
    case '-': return ClassLabel::negative;
    case '?': return ClassLabel::indeterminate;
    default:
      throw error(std::string("unknown label token '") + c + "'; expected +, - or ?");
  }
}

QuantumDataSet::QuantumDataSet(Eigen::Index dimension, std::vector<PureState> positives,
                               std::vector<PureState> negatives,
                               std::vector<PureState> indeterminates)
    : dimension_(dimension),
      positives_(std::move(positives)),
      negatives_(std::move(negatives)),
      indeterminates_(std::move(indeterminates)) {}

QuantumDataSet QuantumDataSet::from_labeled(
    const std::vector<std::pair<PureState, ClassLabel>>& labeled) {
  if (labeled.empty()) {
    throw error("cannot build a data set from zero labeled states");
  }
  const Eigen::Index dim = labeled.front().first.dimension();

  std::vector<PureState> states;
  std::vector<ClassLabel> labels;
  states.reserve(labeled.size());
  for (const auto& [state, label] : labeled) {
    if (state.dimension() != dim) {
      throw dimension_mismatch_error("state dimension " +
                                     std::to_string(state.dimension()) +
                                     " differs from data-set dimension " +
                                     std::to_string(dim));
    }
    bool duplicate = false;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].approx_equal(state)) {
        if (labels[i] != label) {
          throw inconsistent_labeling_error(
              "the same state appears with labels '" + std::string(1, to_char(labels[i])) +
              "' and '" + std::string(1, to_char(label)) + "'");
        }
        duplicate = true;  // set semantics: keep one copy
        break;
      }
    }
    if (!duplicate) {
      states.push_back(state);
      labels.push_back(label);
    }
  }

  std::vector<PureState> positives, negatives, indeterminates;
  for (std::size_t i = 0; i < states.size(); ++i) {
    switch (labels[i]) {
      case ClassLabel::positive: positives.push_back(states[i]); break;
      case ClassLabel::negative: negatives.push_back(states[i]); break;
      case ClassLabel::indeterminate: indeterminates.push_back(states[i]); break;
    }
  }
  if (positives.empty() || negatives.empty()) {
    throw insufficient_experience_error(
        "data set needs at least one positive and one negative instance (got " +
        std::to_string(positives.size()) + "+ / " + std::to_string(negatives.size()) +
        "-)");
  }
  return QuantumDataSet(dim, std::move(positives), std::move(negatives),
                        std::move(indeterminates));
}

QuantumDataSet QuantumDataSet::swapped_polarity() const {
  return QuantumDataSet(dimension_, negatives_, positives_, indeterminates_);
}

QuantumDataSet build_dataset(
    const std::vector<std::pair<PureState, ClassLabel>>& labeled) {
  return QuantumDataSet::from_labeled(labeled);
}

CentroidPair::CentroidPair(DensityOperator positive, DensityOperator negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  if (positive_.dimension() != negative_.dimension()) {
    throw dimension_mismatch_error("centroid dimensions " +
                                   std::to_string(positive_.dimension()) + " vs " +
                                   std::to_string(negative_.dimension()));
  }
}

namespace {

DensityOperator uniform_mixture(const std::vector<PureState>& states) {
  const std::vector<double> weights(states.size(), 1.0 / static_cast<double>(states.size()));
  return mixture(states, weights);
}

}  // namespace

DensityOperator positive_centroid(const QuantumDataSet& ds) {
  if (ds.positives().empty()) {
    throw insufficient_experience_error("no positive instances to average");
  }
  return uniform_mixture(ds.positives());
}

DensityOperator negative_centroid(const QuantumDataSet& ds) {
  if (ds.negatives().empty()) {
    throw insufficient_experience_error("no negative instances to average");
  }
  return uniform_mixture(ds.negatives());
}

CentroidPair centroids(const QuantumDataSet& ds) {
  return CentroidPair(positive_centroid(ds), negative_centroid(ds));
}

FeatureVector classical_centroid(const std::vector<FeatureVector>& points) {
  if (points.empty()) {
    throw error("classical centroid of zero points");
  }
  const Eigen::Index d = points.front().dimension();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(d);
  for (const auto& p : points) {
    if (p.dimension() != d) {
      throw dimension_mismatch_error("point dimension " + std::to_string(p.dimension()) +
                                     " differs from " + std::to_string(d));
    }
    sum += p.values();
  }
  return FeatureVector(sum / static_cast<double>(points.size()));
}

namespace {

void require_classifier_grade(SimilarityThreshold r_star) {
  if (!(r_star.value() > 0.5 && r_star.value() <= 1.0)) {
    throw invalid_threshold_error("classifier threshold " +
                                  std::to_string(r_star.value()) +
                                  " outside (1/2, 1]");
  }
}

}  // namespace

ClassLabel classify(const DensityOperator& sigma, const CentroidPair& centroids,
                    SimilarityThreshold r_star) {
  require_classifier_grade(r_star);
  const bool similar_positive = r_similar(sigma, centroids.positive(), r_star);
  const bool similar_negative = r_similar(sigma, centroids.negative(), r_star);
  if (similar_positive && !similar_negative) return ClassLabel::positive;
  if (similar_negative && !similar_positive) return ClassLabel::negative;
  return ClassLabel::indeterminate;
}

std::vector<ClassLabel> classify_batch(const std::vector<DensityOperator>& states,
                                       const CentroidPair& centroids,
                                       SimilarityThreshold r_star) {
  require_classifier_grade(r_star);
  std::vector<ClassLabel> labels;
  labels.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    try {
      labels.push_back(classify(states[i], centroids, r_star));
    } catch (const error& e) {
      throw error("query " + std::to_string(i) + ": " + e.what());
    }
  }
  return labels;
}

}  // namespace qgestalt
