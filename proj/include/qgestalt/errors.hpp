#pragma once

#include <stdexcept>
#include <string>

namespace qgestalt {

// Base class for every error raised by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Feature vector contains NaN/Inf or is empty.
struct invalid_feature_error : error {
  using error::error;
};

// State is not in the image of amplitude encoding (last amplitude <= 1e-12).
struct not_an_encoding_error : error {
  using error::error;
};

// Operands live in different Hilbert spaces.
struct dimension_mismatch_error : error {
  using error::error;
};

// Mixture over an empty state list.
struct empty_mixture_error : error {
  using error::error;
};

// Mixture weights non-positive, wrong count, or not summing to 1.
struct invalid_weights_error : error {
  using error::error;
};

// Matrix has an eigenvalue below the PSD repair tolerance.
struct not_psd_error : error {
  using error::error;
};

// A computed quantity violates a bound that no valid input can produce
// (e.g. fidelity exceeding 1 beyond the accepted floating-point slack).
struct internal_consistency_error : error {
  using error::error;
};

// The same state appears with two different labels.
struct inconsistent_labeling_error : error {
  using error::error;
};

// A centroid was requested over an empty positive or negative set.
struct insufficient_experience_error : error {
  using error::error;
};

// Threshold outside its admissible interval.
struct invalid_threshold_error : error {
  using error::error;
};

// Encoding target too small for the theme (melodic length or rhythm span).
struct encoding_error : error {
  using error::error;
};

// Event duration not representable on the requested tick grid.
struct quantization_error : error {
  using error::error;
};

// Malformed text input; carries 1-based line and column.
class parse_error : public error {
public:
  parse_error(std::string message, int line, int column)
      : error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace qgestalt
