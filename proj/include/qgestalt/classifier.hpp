#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qgestalt/density.hpp"
#include "qgestalt/similarity.hpp"
#include "qgestalt/state.hpp"

namespace qgestalt {

// Three-valued classification outcome.
enum class ClassLabel { positive, negative, indeterminate };

char to_char(ClassLabel label);                // '+', '-', '?'
ClassLabel label_from_char(char c);            // throws qgestalt::error on other chars

// Classified instance states partitioned into positive / negative /
// indeterminate sets. The three sets are pairwise disjoint (state identity =
// amplitudes within kStateEqTol); positives and negatives are nonempty so that
// both centroids exist. Indeterminate instances are carried but enter neither
// centroid: classification measures similarity to the centroids only.
class QuantumDataSet {
public:
  static QuantumDataSet from_labeled(
      const std::vector<std::pair<PureState, ClassLabel>>& labeled);

  Eigen::Index dimension() const { return dimension_; }
  const std::vector<PureState>& positives() const { return positives_; }
  const std::vector<PureState>& negatives() const { return negatives_; }
  const std::vector<PureState>& indeterminates() const { return indeterminates_; }

  std::size_t n_positive() const { return positives_.size(); }
  std::size_t n_negative() const { return negatives_.size(); }
  std::size_t n_indeterminate() const { return indeterminates_.size(); }

  // Same instance sets with positive and negative roles exchanged.
  QuantumDataSet swapped_polarity() const;

private:
  QuantumDataSet(Eigen::Index dimension, std::vector<PureState> positives,
                 std::vector<PureState> negatives,
                 std::vector<PureState> indeterminates);

  Eigen::Index dimension_;
  std::vector<PureState> positives_;
  std::vector<PureState> negatives_;
  std::vector<PureState> indeterminates_;
};

// Partition labeled states into a data set. Exact duplicates under the same
// label collapse (set semantics); the same state under two labels is an
// inconsistent_labeling_error.
QuantumDataSet build_dataset(
    const std::vector<std::pair<PureState, ClassLabel>>& labeled);

// The positive/negative centroid pair of a data set; both operators share one
// dimension.
class CentroidPair {
public:
  CentroidPair(DensityOperator positive, DensityOperator negative);

  const DensityOperator& positive() const { return positive_; }
  const DensityOperator& negative() const { return negative_; }
  Eigen::Index dimension() const { return positive_.dimension(); }

private:
  DensityOperator positive_;
  DensityOperator negative_;
};

// Uniform-weight mixture of the projectors of all positive instances: the
// formal Gestalt abstracted from previous experience.
DensityOperator positive_centroid(const QuantumDataSet& ds);

// Mirror of positive_centroid over the negative instances.
DensityOperator negative_centroid(const QuantumDataSet& ds);

CentroidPair centroids(const QuantumDataSet& ds);

// Componentwise arithmetic mean: the exact, ambiguity-free classical prototype
// kept as a baseline for contrast.
FeatureVector classical_centroid(const std::vector<FeatureVector>& points);

// Three-valued classifier: + iff sigma is r*-similar to the positive centroid
// and not to the negative one; - for the mirror condition; ? otherwise
// (both-similar and neither-similar collapse to ?). Requires 1/2 < r* <= 1.
ClassLabel classify(const DensityOperator& sigma, const CentroidPair& centroids,
                    SimilarityThreshold r_star);

// Elementwise classify, order-preserving. The first failing element aborts the
// batch with its index in the error message.
std::vector<ClassLabel> classify_batch(const std::vector<DensityOperator>& states,
                                       const CentroidPair& centroids,
                                       SimilarityThreshold r_star);

}  // namespace qgestalt
