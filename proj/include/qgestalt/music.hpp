#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgestalt/classifier.hpp"
#include "qgestalt/density.hpp"
#include "qgestalt/similarity.hpp"
#include "qgestalt/state.hpp"

namespace qgestalt::music {

// Largest melodic interval a theme may contain, in semitones (sanity bound).
inline constexpr int kMaxInterval = 48;

// Exact positive duration in beats.
class Rational {
public:
  // Requires num > 0 and den > 0; stored normalized.
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "2" or "3/4". Throws qgestalt::error on malformed or non-positive
  // input (the theme parser wraps this into a parse_error with location).
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& other) const;
  bool operator==(const Rational& other) const = default;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

private:
  std::int64_t num_;
  std::int64_t den_;
};

struct Meter {
  int beats_per_bar;
  int beat_unit;
};

// One melodic event: an interval in semitones relative to the previous
// sounding note (first sounding note carries 0 by convention), or a rest.
struct ThemeEvent {
  std::optional<int> interval;  // nullopt = rest
  Rational duration;            // beats

  bool is_rest() const { return !interval.has_value(); }

  static ThemeEvent note(int interval, Rational duration) {
    return ThemeEvent{interval, duration};
  }
  static ThemeEvent rest(Rational duration) { return ThemeEvent{std::nullopt, duration}; }
};

// Pitch- and timbre-invariant musical idea: a sequence of melodic intervals
// and rests embedded in a rhythmic structure with a meter.
class AbstractTheme {
public:
  // Requires at least one non-rest event and |interval| <= kMaxInterval.
  AbstractTheme(std::string name, std::vector<ThemeEvent> events, Meter meter);

  const std::string& name() const { return name_; }
  const std::vector<ThemeEvent>& events() const { return events_; }
  const Meter& meter() const { return meter_; }

  std::size_t sounding_count() const;
  Rational total_duration() const;

private:
  std::string name_;
  std::vector<ThemeEvent> events_;
  Meter meter_;
};

// Parse the line-oriented theme format:
//
//   # comment
//   meter 2/4
//   rest 1/2
//   note 0 1/2
//   note -4 2
//
// The meter line comes first; each following line is `note <interval>
// <duration>` or `rest <duration>`, durations as `n` or `n/d` beats. The first
// sounding note must carry interval 0. Errors report line and column.
AbstractTheme parse_theme(std::string_view text, std::string name = "theme");

// Transcription helper: absolute MIDI-style pitches (nullopt = rest) to the
// interval representation. Transposing every pitch by the same amount yields
// the identical theme.
AbstractTheme theme_from_pitches(std::string name,
                                 const std::vector<std::optional<int>>& pitches,
                                 const std::vector<Rational>& durations, Meter meter);

// Interval sequence of the sounding events, zero-padded to `length`, passed
// through amplitude encoding. Transposition-invariant by construction.
// Requires length >= sounding_count.
PureState encode_melodic(const AbstractTheme& theme, int length);

// Total theme duration in ticks at `grid` ticks per beat. Throws
// quantization_error if any event duration is not exact on the grid.
std::int64_t total_ticks(const AbstractTheme& theme, int grid);

// Onset-indicator vector over the tick grid (1 at each sounding onset tick),
// zero-padded to `span` ticks, amplitude-encoded. Pitch-independent by
// construction. Durations must be exact on the grid; span must cover the
// theme.
PureState encode_rhythmic(const AbstractTheme& theme, int grid, std::int64_t span);

// A theme encoded on both similarity channels.
struct MusicalIdeaState {
  PureState melodic;
  PureState rhythmic;

  bool approx_equal(const MusicalIdeaState& other, double tol = kStateEqTol) const {
    return melodic.approx_equal(other.melodic, tol) &&
           rhythmic.approx_equal(other.rhythmic, tol);
  }
};

// Channel-level encoding parameters. span == 0 means "derive from the themes
// at hand" (the largest total tick count wins).
struct EncodingConfig {
  int melodic_length = 16;
  int grid = 4;
  std::int64_t span = 0;
};

// Encode one theme on both channels. Requires config.span > 0 (resolve the
// corpus-wide span first; see resolve_span).
MusicalIdeaState encode_theme(const AbstractTheme& theme, const EncodingConfig& config);

// Largest total tick count over a corpus of themes, or config.span when set.
std::int64_t resolve_span(const std::vector<AbstractTheme>& corpus,
                          const EncodingConfig& config);

enum class SimilarityMode { melodic, rhythmic, strong, weak };

const char* to_string(SimilarityMode mode);
SimilarityMode mode_from_string(std::string_view text);  // throws qgestalt::error

// Classified musical ideas partitioned like a quantum data set; positives and
// negatives nonempty, the three sets pairwise disjoint, channel dimensions
// uniform.
class MusicalDataSet {
public:
  static MusicalDataSet from_labeled(
      const std::vector<std::pair<MusicalIdeaState, ClassLabel>>& labeled);

  const std::vector<MusicalIdeaState>& positives() const { return positives_; }
  const std::vector<MusicalIdeaState>& negatives() const { return negatives_; }
  const std::vector<MusicalIdeaState>& indeterminates() const { return indeterminates_; }

  Eigen::Index melodic_dimension() const { return melodic_dimension_; }
  Eigen::Index rhythmic_dimension() const { return rhythmic_dimension_; }

  MusicalDataSet swapped_polarity() const;

private:
  MusicalDataSet(Eigen::Index melodic_dim, Eigen::Index rhythmic_dim,
                 std::vector<MusicalIdeaState> positives,
                 std::vector<MusicalIdeaState> negatives,
                 std::vector<MusicalIdeaState> indeterminates);

  Eigen::Index melodic_dimension_;
  Eigen::Index rhythmic_dimension_;
  std::vector<MusicalIdeaState> positives_;
  std::vector<MusicalIdeaState> negatives_;
  std::vector<MusicalIdeaState> indeterminates_;
};

// Per-channel positive/negative centroids: four uniform mixtures. The
// alternative — one joint mixture per polarity over combined idea states —
// could not carry independent melodic and rhythmic thresholds, so the
// channels are kept separate and every mode is evaluated channel-wise.
class MusicalCentroids {
public:
  MusicalCentroids(DensityOperator melodic_positive, DensityOperator rhythmic_positive,
                   DensityOperator melodic_negative, DensityOperator rhythmic_negative);

  const DensityOperator& melodic_positive() const { return melodic_positive_; }
  const DensityOperator& rhythmic_positive() const { return rhythmic_positive_; }
  const DensityOperator& melodic_negative() const { return melodic_negative_; }
  const DensityOperator& rhythmic_negative() const { return rhythmic_negative_; }

private:
  DensityOperator melodic_positive_;
  DensityOperator rhythmic_positive_;
  DensityOperator melodic_negative_;
  DensityOperator rhythmic_negative_;
};

// Mode-dependent r-similarity between two musical ideas: melodic / rhythmic
// check one channel, strong is their conjunction, weak their disjunction.
bool musical_similar(const MusicalIdeaState& a, const MusicalIdeaState& b,
                     SimilarityMode mode, SimilarityThreshold r);

MusicalCentroids musical_centroids(const MusicalDataSet& ds);

// Three-valued musical classifier: + iff the idea is r*-similar (in the chosen
// mode) to the positive centroid channels and not to the negative ones; - for
// the mirror; ? otherwise. Requires 1/2 < r* <= 1.
ClassLabel classify_theme(const MusicalIdeaState& idea, const MusicalCentroids& centroids,
                          SimilarityMode mode, SimilarityThreshold r_star);

}  // namespace qgestalt::music
