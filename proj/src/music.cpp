#include "qgestalt/music.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qgestalt::music {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (num_ <= 0 || den_ <= 0) {
    throw error("duration must be positive (got " + std::to_string(num) + "/" +
                std::to_string(den) + ")");
  }
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw error("malformed number '" + std::string(s) + "'");
    }
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text), 1);
  }
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

AbstractTheme::AbstractTheme(std::string name, std::vector<ThemeEvent> events, Meter meter)
    : name_(std::move(name)), events_(std::move(events)), meter_(meter) {
  if (meter_.beats_per_bar < 1 || meter_.beat_unit < 1) {
    throw error("meter components must be positive");
  }
  if (events_.empty()) {
    throw error("theme has no events");
  }
  bool has_sounding = false;
  for (const auto& e : events_) {
    if (!e.is_rest()) {
      has_sounding = true;
      if (std::abs(*e.interval) > kMaxInterval) {
        throw error("interval " + std::to_string(*e.interval) + " exceeds +-" +
                    std::to_string(kMaxInterval) + " semitones");
      }
    }
  }
  if (!has_sounding) {
    throw error("theme has no sounding events");
  }
}

std::size_t AbstractTheme::sounding_count() const {
  return static_cast<std::size_t>(
      std::count_if(events_.begin(), events_.end(),
                    [](const ThemeEvent& e) { return !e.is_rest(); }));
}

Rational AbstractTheme::total_duration() const {
  Rational total = events_.front().duration;
  for (std::size_t i = 1; i < events_.size(); ++i) {
    total = total + events_[i].duration;
  }
  return total;
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int_token(const Token& token, int line_no) {
  int v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.text.data(), token.text.data() + token.text.size(), v);
  if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
    throw parse_error("malformed integer '" + std::string(token.text) + "'", line_no,
                      token.column);
  }
  return v;
}

Rational parse_duration_token(const Token& token, int line_no) {
  try {
    return Rational::parse(token.text);
  } catch (const error& e) {
    throw parse_error(e.what(), line_no, token.column);
  }
}

}  // namespace

AbstractTheme parse_theme(std::string_view text, std::string name) {
  std::vector<ThemeEvent> events;
  bool meter_seen = false;
  bool first_note_seen = false;
  Meter meter{0, 0};

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& head = tokens.front();
    if (!meter_seen) {
      if (head.text != "meter") {
        throw parse_error("expected 'meter <beats>/<unit>' before events", line_no,
                          head.column);
      }
      if (tokens.size() != 2) {
        throw parse_error("meter takes exactly one <beats>/<unit> argument", line_no,
                          head.column);
      }
      const std::string_view arg = tokens[1].text;
      const std::size_t slash = arg.find('/');
      if (slash == std::string_view::npos) {
        throw parse_error("meter must be <beats>/<unit>", line_no, tokens[1].column);
      }
      const Token beats{arg.substr(0, slash), tokens[1].column};
      const Token unit{arg.substr(slash + 1),
                       tokens[1].column + static_cast<int>(slash) + 1};
      meter.beats_per_bar = parse_int_token(beats, line_no);
      meter.beat_unit = parse_int_token(unit, line_no);
      if (meter.beats_per_bar < 1 || meter.beat_unit < 1) {
        throw parse_error("meter components must be positive", line_no, tokens[1].column);
      }
      meter_seen = true;
      continue;
    }

    if (head.text == "note") {
      if (tokens.size() != 3) {
        throw parse_error("note takes <interval> <duration>", line_no, head.column);
      }
      const int interval = parse_int_token(tokens[1], line_no);
      if (std::abs(interval) > kMaxInterval) {
        throw parse_error("interval " + std::to_string(interval) + " exceeds +-" +
                          std::to_string(kMaxInterval),
                          line_no, tokens[1].column);
      }
      if (!first_note_seen && interval != 0) {
        throw parse_error("first sounding note must have interval 0", line_no,
                          tokens[1].column);
      }
      first_note_seen = true;
      events.push_back(ThemeEvent::note(interval, parse_duration_token(tokens[2], line_no)));
    } else if (head.text == "rest") {
      if (tokens.size() != 2) {
        throw parse_error("rest takes <duration>", line_no, head.column);
      }
      events.push_back(ThemeEvent::rest(parse_duration_token(tokens[1], line_no)));
    } else {
      throw parse_error("unknown directive '" + std::string(head.text) + "'", line_no,
                        head.column);
    }
  }

  if (!meter_seen) {
    throw parse_error("empty theme file (no meter line)", line_no, 1);
  }
  if (events.empty() || !first_note_seen) {
    throw parse_error("theme has no sounding events", line_no, 1);
  }
  return AbstractTheme(std::move(name), std::move(events), meter);
}

AbstractTheme theme_from_pitches(std::string name,
                                 const std::vector<std::optional<int>>& pitches,
                                 const std::vector<Rational>& durations, Meter meter) {
  if (pitches.size() != durations.size()) {
    throw error("pitches and durations differ in length");
  }
  std::vector<ThemeEvent> events;
  events.reserve(pitches.size());
  std::optional<int> previous_pitch;
  for (std::size_t i = 0; i < pitches.size(); ++i) {
    if (!pitches[i].has_value()) {
      events.push_back(ThemeEvent::rest(durations[i]));
      continue;
    }
    const int interval = previous_pitch ? *pitches[i] - *previous_pitch : 0;
    events.push_back(ThemeEvent::note(interval, durations[i]));
    previous_pitch = *pitches[i];
  }
  return AbstractTheme(std::move(name), std::move(events), meter);
}

PureState encode_melodic(const AbstractTheme& theme, int length) {
  const std::size_t sounding = theme.sounding_count();
  if (length < 1 || static_cast<std::size_t>(length) < sounding) {
    throw encoding_error("melodic length " + std::to_string(length) +
                         " cannot hold " + std::to_string(sounding) + " intervals");
  }
  Eigen::VectorXd features = Eigen::VectorXd::Zero(length);
  Eigen::Index k = 0;
  for (const auto& e : theme.events()) {
    if (!e.is_rest()) features(k++) = static_cast<double>(*e.interval);
  }
  return amplitude_encode(FeatureVector(std::move(features)));
}

namespace {

std::int64_t event_ticks(const ThemeEvent& event, int grid) {
  const std::int64_t scaled = event.duration.num() * grid;
  if (scaled % event.duration.den() != 0) {
    throw quantization_error("duration " + event.duration.str() +
                             " is not representable at " + std::to_string(grid) +
                             " ticks per beat");
  }
  return scaled / event.duration.den();
}

}  // namespace

std::int64_t total_ticks(const AbstractTheme& theme, int grid) {
  if (grid < 1) {
    throw error("grid must be >= 1 tick per beat");
  }
  std::int64_t total = 0;
  for (const auto& e : theme.events()) {
    total += event_ticks(e, grid);
  }
  return total;
}

PureState encode_rhythmic(const AbstractTheme& theme, int grid, std::int64_t span) {
  const std::int64_t needed = total_ticks(theme, grid);
  if (span < needed) {
    throw encoding_error("rhythm span " + std::to_string(span) + " ticks cannot hold " +
                         std::to_string(needed));
  }
  Eigen::VectorXd onsets = Eigen::VectorXd::Zero(span);
  std::int64_t tick = 0;
  for (const auto& e : theme.events()) {
    if (!e.is_rest()) onsets(tick) = 1.0;
    tick += event_ticks(e, grid);
  }
  return amplitude_encode(FeatureVector(std::move(onsets)));
}

MusicalIdeaState encode_theme(const AbstractTheme& theme, const EncodingConfig& config) {
  if (config.span < 1) {
    throw error("encoding span unresolved; call resolve_span first");
  }
  return MusicalIdeaState{encode_melodic(theme, config.melodic_length),
                          encode_rhythmic(theme, config.grid, config.span)};
}

std::int64_t resolve_span(const std::vector<AbstractTheme>& corpus,
                          const EncodingConfig& config) {
  if (config.span > 0) return config.span;
  if (corpus.empty()) {
    throw error("cannot derive a rhythm span from an empty corpus");
  }
  std::int64_t span = 0;
  for (const auto& theme : corpus) {
    span = std::max(span, total_ticks(theme, config.grid));
  }
  return span;
}

const char* to_string(SimilarityMode mode) {
  switch (mode) {
    case SimilarityMode::melodic: return "melodic";
    case SimilarityMode::rhythmic: return "rhythmic";
    case SimilarityMode::strong: return "strong";
    case SimilarityMode::weak: return "weak";
  }
  throw error("unreachable similarity mode");
}

SimilarityMode mode_from_string(std::string_view text) {
  if (text == "melodic") return SimilarityMode::melodic;
  if (text == "rhythmic") return SimilarityMode::rhythmic;
  if (text == "strong") return SimilarityMode::strong;
  if (text == "weak") return SimilarityMode::weak;
  throw error("unknown similarity mode '" + std::string(text) +
              "'; expected melodic|rhythmic|strong|weak");
}

MusicalDataSet::MusicalDataSet(Eigen::Index melodic_dim, Eigen::Index rhythmic_dim,
                               std::vector<MusicalIdeaState> positives,
                               std::vector<MusicalIdeaState> negatives,
                               std::vector<MusicalIdeaState> indeterminates)
    : melodic_dimension_(melodic_dim),
      rhythmic_dimension_(rhythmic_dim),
      positives_(std::move(positives)),
      negatives_(std::move(negatives)),
      indeterminates_(std::move(indeterminates)) {}

MusicalDataSet MusicalDataSet::from_labeled(
    const std::vector<std::pair<MusicalIdeaState, ClassLabel>>& labeled) {
  if (labeled.empty()) {
    throw error("cannot build a musical data set from zero labeled ideas");
  }
  const Eigen::Index melodic_dim = labeled.front().first.melodic.dimension();
  const Eigen::Index rhythmic_dim = labeled.front().first.rhythmic.dimension();

  std::vector<MusicalIdeaState> ideas;
  std::vector<ClassLabel> labels;
  for (const auto& [idea, label] : labeled) {
    if (idea.melodic.dimension() != melodic_dim ||
        idea.rhythmic.dimension() != rhythmic_dim) {
      throw dimension_mismatch_error("musical idea channel dimensions differ across the data set");
    }
    bool duplicate = false;
    for (std::size_t i = 0; i < ideas.size(); ++i) {
      if (ideas[i].approx_equal(idea)) {
        if (labels[i] != label) {
          throw inconsistent_labeling_error(
              "the same musical idea appears with labels '" +
              std::string(1, to_char(labels[i])) + "' and '" +
              std::string(1, to_char(label)) + "'");
        }
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      ideas.push_back(idea);
      labels.push_back(label);
    }
  }

  std::vector<MusicalIdeaState> positives, negatives, indeterminates;
  for (std::size_t i = 0; i < ideas.size(); ++i) {
    switch (labels[i]) {
      case ClassLabel::positive: positives.push_back(ideas[i]); break;
      case ClassLabel::negative: negatives.push_back(ideas[i]); break;
      case ClassLabel::indeterminate: indeterminates.push_back(ideas[i]); break;
    }
  }
  if (positives.empty() || negatives.empty()) {
    throw insufficient_experience_error(
        "musical data set needs at least one positive and one negative idea");
  }
  return MusicalDataSet(melodic_dim, rhythmic_dim, std::move(positives),
                        std::move(negatives), std::move(indeterminates));
}

MusicalDataSet MusicalDataSet::swapped_polarity() const {
  return MusicalDataSet(melodic_dimension_, rhythmic_dimension_, negatives_, positives_,
                        indeterminates_);
}

MusicalCentroids::MusicalCentroids(DensityOperator melodic_positive,
                                   DensityOperator rhythmic_positive,
                                   DensityOperator melodic_negative,
                                   DensityOperator rhythmic_negative)
    : melodic_positive_(std::move(melodic_positive)),
      rhythmic_positive_(std::move(rhythmic_positive)),
      melodic_negative_(std::move(melodic_negative)),
      rhythmic_negative_(std::move(rhythmic_negative)) {
  if (melodic_positive_.dimension() != melodic_negative_.dimension() ||
      rhythmic_positive_.dimension() != rhythmic_negative_.dimension()) {
    throw dimension_mismatch_error("centroid channel dimensions differ across polarity");
  }
}

bool musical_similar(const MusicalIdeaState& a, const MusicalIdeaState& b,
                     SimilarityMode mode, SimilarityThreshold r) {
  const auto melodic = [&] {
    return meets_threshold(fidelity_pure(a.melodic, b.melodic), r.value());
  };
  const auto rhythmic = [&] {
    return meets_threshold(fidelity_pure(a.rhythmic, b.rhythmic), r.value());
  };
  switch (mode) {
    case SimilarityMode::melodic: return melodic();
    case SimilarityMode::rhythmic: return rhythmic();
    case SimilarityMode::strong: return melodic() && rhythmic();
    case SimilarityMode::weak: return melodic() || rhythmic();
  }
  throw error("unreachable similarity mode");
}

namespace {

DensityOperator uniform_channel_mixture(const std::vector<MusicalIdeaState>& ideas,
                                        bool melodic) {
  std::vector<PureState> channel;
  channel.reserve(ideas.size());
  for (const auto& idea : ideas) {
    channel.push_back(melodic ? idea.melodic : idea.rhythmic);
  }
  const std::vector<double> weights(channel.size(),
                                    1.0 / static_cast<double>(channel.size()));
  return mixture(channel, weights);
}

}  // namespace

MusicalCentroids musical_centroids(const MusicalDataSet& ds) {
  if (ds.positives().empty() || ds.negatives().empty()) {
    throw insufficient_experience_error("musical centroids need both polarities populated");
  }
  return MusicalCentroids(uniform_channel_mixture(ds.positives(), true),
                          uniform_channel_mixture(ds.positives(), false),
                          uniform_channel_mixture(ds.negatives(), true),
                          uniform_channel_mixture(ds.negatives(), false));
}

namespace {

// Mode-wise r-similarity of a pure idea to one polarity's centroid channels.
bool similar_to_side(const MusicalIdeaState& idea, const DensityOperator& melodic_centroid,
                     const DensityOperator& rhythmic_centroid, SimilarityMode mode,
                     SimilarityThreshold r) {
  const auto melodic = [&] {
    return r_similar(projector(idea.melodic), melodic_centroid, r);
  };
  const auto rhythmic = [&] {
    return r_similar(projector(idea.rhythmic), rhythmic_centroid, r);
  };
  switch (mode) {
    case SimilarityMode::melodic: return melodic();
    case SimilarityMode::rhythmic: return rhythmic();
    case SimilarityMode::strong: return melodic() && rhythmic();
    case SimilarityMode::weak: return melodic() || rhythmic();
  }
  throw error("unreachable similarity mode");
}

}  // namespace

ClassLabel classify_theme(const MusicalIdeaState& idea, const MusicalCentroids& centroids,
                          SimilarityMode mode, SimilarityThreshold r_star) {
  if (!(r_star.value() > 0.5 && r_star.value() <= 1.0)) {
    throw invalid_threshold_error("classifier threshold " +
                                  std::to_string(r_star.value()) + " outside (1/2, 1]");
  }
  const bool similar_positive = similar_to_side(
      idea, centroids.melodic_positive(), centroids.rhythmic_positive(), mode, r_star);
  const bool similar_negative = similar_to_side(
      idea, centroids.melodic_negative(), centroids.rhythmic_negative(), mode, r_star);
  if (similar_positive && !similar_negative) return ClassLabel::positive;
  if (similar_negative && !similar_positive) return ClassLabel::negative;
  return ClassLabel::indeterminate;
}

}  // namespace qgestalt::music
