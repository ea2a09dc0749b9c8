#include "qgestalt/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qgestalt::selftest {

std::uint64_t Rng::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

int Rng::next_int(int lo, int hi) {
  return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

double Rng::next_gaussian() {
  // Box-Muller; u clamped away from 0.
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double u = std::max(next_unit(), 1e-300);
  const double v = next_unit();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
}

PureState random_pure_state(Rng& rng, int dimension) {
  while (true) {
    Eigen::VectorXd v(dimension);
    for (int i = 0; i < dimension; ++i) v(i) = rng.next_gaussian();
    if (v.norm() > 1e-6) return PureState::normalized(std::move(v));
  }
}

DensityOperator random_density_operator(Rng& rng, int dimension, int rank) {
  std::vector<PureState> states;
  std::vector<double> weights;
  double sum = 0.0;
  for (int i = 0; i < rank; ++i) {
    states.push_back(random_pure_state(rng, dimension));
    const double w = 0.1 + rng.next_unit();
    weights.push_back(w);
    sum += w;
  }
  for (double& w : weights) w /= sum;
  // Renormalize exactly against rounding in the division above.
  double check = 0.0;
  for (double w : weights) check += w;
  weights.back() += 1.0 - check;
  return mixture(states, weights);
}

QuantumDataSet random_dataset(Rng& rng, int dimension, int n_positive, int n_negative,
                              int n_indeterminate) {
  std::vector<std::pair<PureState, ClassLabel>> labeled;
  const auto add = [&](int count, ClassLabel label) {
    for (int i = 0; i < count; ++i) {
      while (true) {
        PureState candidate = random_pure_state(rng, dimension);
        const bool collides =
            std::any_of(labeled.begin(), labeled.end(), [&](const auto& entry) {
              return entry.first.approx_equal(candidate);
            });
        if (!collides) {
          labeled.emplace_back(std::move(candidate), label);
          break;
        }
      }
    }
  };
  add(n_positive, ClassLabel::positive);
  add(n_negative, ClassLabel::negative);
  add(n_indeterminate, ClassLabel::indeterminate);
  return build_dataset(labeled);
}

music::AbstractTheme random_theme(Rng& rng, const std::string& name) {
  using music::Rational;
  static const Rational kDurations[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                        Rational(1, 1), Rational(3, 2), Rational(2, 1)};
  static const music::Meter kMeters[] = {{2, 4}, {3, 4}, {4, 4}};

  const int n_events = rng.next_int(2, 8);
  std::vector<music::ThemeEvent> events;
  bool sounding_seen = false;
  for (int i = 0; i < n_events; ++i) {
    const Rational duration = kDurations[rng.next_int(0, 5)];
    const bool must_sound = !sounding_seen && i == n_events - 1;
    if (!must_sound && rng.next_unit() < 0.2) {
      events.push_back(music::ThemeEvent::rest(duration));
      continue;
    }
    const int interval = sounding_seen ? rng.next_int(-12, 12) : 0;
    events.push_back(music::ThemeEvent::note(interval, duration));
    sounding_seen = true;
  }
  return music::AbstractTheme(name, std::move(events), kMeters[rng.next_int(0, 2)]);
}

namespace {

using music::AbstractTheme;
using music::Rational;

AbstractTheme make_fifth_main_theme() {
  // 2/4; eighth rest, three repeated eighths, falling major third held two
  // beats.
  std::vector<music::ThemeEvent> events = {
      music::ThemeEvent::rest(Rational(1, 2)),
      music::ThemeEvent::note(0, Rational(1, 2)),
      music::ThemeEvent::note(0, Rational(1, 2)),
      music::ThemeEvent::note(0, Rational(1, 2)),
      music::ThemeEvent::note(-4, Rational(2, 1)),
  };
  return AbstractTheme("fifth-main", std::move(events), music::Meter{2, 4});
}

AbstractTheme make_op10n1_primary_theme() {
  // 3/4; rising minor-triad rocket in double-dotted rhythm.
  std::vector<music::ThemeEvent> events = {
      music::ThemeEvent::note(0, Rational(7, 4)),
      music::ThemeEvent::note(3, Rational(1, 4)),
      music::ThemeEvent::note(4, Rational(7, 4)),
      music::ThemeEvent::note(5, Rational(1, 4)),
      music::ThemeEvent::note(3, Rational(2, 1)),
  };
  return AbstractTheme("op10n1-primary", std::move(events), music::Meter{3, 4});
}

AbstractTheme make_op10n1_major_theme() {
  // Identical rhythm over the major triad.
  std::vector<music::ThemeEvent> events = {
      music::ThemeEvent::note(0, Rational(7, 4)),
      music::ThemeEvent::note(4, Rational(1, 4)),
      music::ThemeEvent::note(3, Rational(7, 4)),
      music::ThemeEvent::note(5, Rational(1, 4)),
      music::ThemeEvent::note(4, Rational(2, 1)),
  };
  return AbstractTheme("op10n1-major", std::move(events), music::Meter{3, 4});
}

}  // namespace

const music::AbstractTheme& fifth_main_theme() {
  static const AbstractTheme theme = make_fifth_main_theme();
  return theme;
}

const music::AbstractTheme& op10n1_primary_theme() {
  static const AbstractTheme theme = make_op10n1_primary_theme();
  return theme;
}

const music::AbstractTheme& op10n1_major_theme() {
  static const AbstractTheme theme = make_op10n1_major_theme();
  return theme;
}

namespace {

std::string format_number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

// Literal re-evaluation of the three-valued rule, coded apart from classify().
// The similarity relation itself (threshold met within kSimilarityEps) is part
// of the contract both sides share.
ClassLabel literal_classify(const DensityOperator& sigma, const DensityOperator& rho_pos,
                            const DensityOperator& rho_neg, double r_star) {
  const bool sim_pos = meets_threshold(fidelity(sigma, rho_pos), r_star);
  const bool sim_neg = meets_threshold(fidelity(sigma, rho_neg), r_star);
  if (sim_pos && !sim_neg) return ClassLabel::positive;
  if (!sim_pos && sim_neg) return ClassLabel::negative;
  return ClassLabel::indeterminate;
}

// Literal re-evaluation of the musical rule over raw channel fidelities.
ClassLabel literal_classify_theme(const music::MusicalIdeaState& idea,
                                  const music::MusicalCentroids& c,
                                  music::SimilarityMode mode, double r_star) {
  const auto side_similar = [&](const DensityOperator& mel, const DensityOperator& rhy) {
    const bool m = meets_threshold(fidelity(projector(idea.melodic), mel), r_star);
    const bool r = meets_threshold(fidelity(projector(idea.rhythmic), rhy), r_star);
    switch (mode) {
      case music::SimilarityMode::melodic: return m;
      case music::SimilarityMode::rhythmic: return r;
      case music::SimilarityMode::strong: return m && r;
      case music::SimilarityMode::weak: return m || r;
    }
    throw error("unreachable mode");
  };
  const bool sim_pos = side_similar(c.melodic_positive(), c.rhythmic_positive());
  const bool sim_neg = side_similar(c.melodic_negative(), c.rhythmic_negative());
  if (sim_pos && !sim_neg) return ClassLabel::positive;
  if (!sim_pos && sim_neg) return ClassLabel::negative;
  return ClassLabel::indeterminate;
}

CheckResult check_fidelity_axioms(const Options& opt) {
  Rng rng(opt.seed ^ 0x1ULL);
  double max_symmetry_gap = 0.0;
  double max_range_excess = 0.0;
  double min_self_fidelity = 1.0;
  double max_orthogonal = 0.0;
  double max_pure_gap = 0.0;
  std::string failure;

  for (int i = 0; i < opt.fidelity_pairs && failure.empty(); ++i) {
    const int dim = 2 + i % 7;
    const DensityOperator rho = random_density_operator(rng, dim, rng.next_int(1, dim));
    const DensityOperator sigma = random_density_operator(rng, dim, rng.next_int(1, dim));

    const double raw = fidelity_unclamped(rho, sigma);
    max_range_excess = std::max({max_range_excess, raw - 1.0, -raw});
    if (raw < -opt.fidelity_range_slack || raw > 1.0 + opt.fidelity_range_slack) {
      failure = "raw fidelity " + format_number(raw) + " out of range at pair " +
                std::to_string(i);
      break;
    }
    const double gap = std::abs(fidelity(rho, sigma) - fidelity(sigma, rho));
    max_symmetry_gap = std::max(max_symmetry_gap, gap);
    if (gap > opt.fidelity_symmetry_tol) {
      failure = "symmetry gap " + format_number(gap) + " at pair " + std::to_string(i);
      break;
    }
    const double self = fidelity(rho, rho);
    min_self_fidelity = std::min(min_self_fidelity, self);
    if (self < 1.0 - opt.fidelity_identity_tol) {
      failure = "self fidelity " + format_number(self) + " at pair " + std::to_string(i);
      break;
    }
  }

  // Orthogonal-support pairs: fidelity vanishes exactly when the operator
  // product is null; both directions realized on constructed pairs.
  for (int i = 0; i < 50 && failure.empty(); ++i) {
    const int dim = 4 + i % 5;
    PureState a = random_pure_state(rng, dim);
    Eigen::VectorXd b_raw(dim);
    for (int k = 0; k < dim; ++k) b_raw(k) = rng.next_gaussian();
    b_raw -= a.amplitudes() * a.amplitudes().dot(b_raw);
    if (b_raw.norm() < 1e-6) continue;
    const PureState b = PureState::normalized(std::move(b_raw));
    const DensityOperator pa = projector(a);
    const DensityOperator pb = projector(b);
    const double f = fidelity(pa, pb);
    max_orthogonal = std::max(max_orthogonal, f);
    const double product_norm = (pa.matrix() * pb.matrix()).cwiseAbs().maxCoeff();
    if (f > opt.fidelity_zero_tol) {
      failure = "orthogonal-support fidelity " + format_number(f);
      break;
    }
    if (f <= opt.fidelity_zero_tol && product_norm > 1e-9) {
      failure = "null-product violation: max |rho*sigma| " + format_number(product_norm);
      break;
    }
  }

  for (int i = 0; i < opt.pure_reduction_pairs && failure.empty(); ++i) {
    const int dim = 2 + i % 7;
    const PureState psi = random_pure_state(rng, dim);
    const PureState phi = random_pure_state(rng, dim);
    const double gap =
        std::abs(fidelity(projector(psi), projector(phi)) - fidelity_pure(psi, phi));
    max_pure_gap = std::max(max_pure_gap, gap);
    if (gap > opt.pure_reduction_tol) {
      failure = "pure reduction gap " + format_number(gap) + " at pair " +
                std::to_string(i);
      break;
    }
  }

  std::ostringstream detail;
  if (!failure.empty()) {
    detail << failure;
  } else {
    detail << opt.fidelity_pairs << " mixed pairs dims 2-8: max symmetry gap "
           << format_number(max_symmetry_gap) << ", min self fidelity "
           << format_number(min_self_fidelity) << ", max orthogonal fidelity "
           << format_number(max_orthogonal) << ", max pure-reduction gap "
           << format_number(max_pure_gap);
  }
  return CheckResult{"fidelity-axioms", failure.empty(), detail.str()};
}

CheckResult check_encoding_roundtrip(const Options& opt) {
  Rng rng(opt.seed ^ 0x2ULL);
  double max_rel = 0.0;
  std::string failure;
  for (int i = 0; i < opt.roundtrip_vectors && failure.empty(); ++i) {
    const int d = 1 + i % 8;
    Eigen::VectorXd x(d);
    for (int k = 0; k < d; ++k) x(k) = rng.next_range(-1e6, 1e6);
    const FeatureVector original(x);
    const FeatureVector decoded = decode_features(amplitude_encode(original));
    for (int k = 0; k < d; ++k) {
      const double rel =
          std::abs(decoded[k] - original[k]) / std::max(1.0, std::abs(original[k]));
      max_rel = std::max(max_rel, rel);
      if (rel > opt.roundtrip_rel_tol) {
        failure = "relative error " + format_number(rel) + " at vector " +
                  std::to_string(i) + " component " + std::to_string(k);
        break;
      }
    }
  }
  const std::string detail = failure.empty()
                                 ? std::to_string(opt.roundtrip_vectors) +
                                       " vectors, components up to 1e6: max relative error " +
                                       format_number(max_rel)
                                 : failure;
  return CheckResult{"encoding-roundtrip", failure.empty(), detail};
}

CheckResult check_classifier_oracle(const Options& opt) {
  Rng rng(opt.seed ^ 0x3ULL);
  long comparisons = 0;
  std::string failure;

  // Every (dimension, composition) shape with <= 4 states, several seeded
  // draws each, crossed with the full threshold grid.
  const int compositions[][3] = {{1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 2, 0},
                                 {2, 1, 1}, {1, 2, 1}, {3, 1, 0}, {1, 3, 0}, {1, 1, 2}};
  for (int dim = 2; dim <= 4 && failure.empty(); ++dim) {
    for (const auto& comp : compositions) {
      if (!failure.empty()) break;
      for (int draw = 0; draw < 5 && failure.empty(); ++draw) {
        const QuantumDataSet ds = random_dataset(rng, dim, comp[0], comp[1], comp[2]);
        const CentroidPair cp = centroids(ds);

        std::vector<DensityOperator> queries;
        for (const auto& s : ds.positives()) queries.push_back(projector(s));
        for (const auto& s : ds.negatives()) queries.push_back(projector(s));
        for (const auto& s : ds.indeterminates()) queries.push_back(projector(s));
        queries.push_back(cp.positive());
        queries.push_back(cp.negative());
        queries.push_back(random_density_operator(rng, dim, rng.next_int(1, dim)));
        queries.push_back(random_density_operator(rng, dim, rng.next_int(1, dim)));

        for (int step = 0; step <= 9 && failure.empty(); ++step) {
          const double r_star = 0.55 + 0.05 * step;
          for (std::size_t q = 0; q < queries.size(); ++q) {
            const ClassLabel got =
                classify(queries[q], cp, SimilarityThreshold(r_star));
            const ClassLabel expected =
                literal_classify(queries[q], cp.positive(), cp.negative(), r_star);
            ++comparisons;
            if (got != expected) {
              failure = std::string("disagreement at dim ") + std::to_string(dim) +
                        ", r*=" + format_number(r_star) + ", query " + std::to_string(q) +
                        ": got '" + to_char(got) + "', oracle '" + to_char(expected) + "'";
              break;
            }
          }
        }
      }
    }
  }

  // Polarity symmetry on independent seeded data sets.
  for (int i = 0; i < opt.polarity_datasets && failure.empty(); ++i) {
    const int dim = 2 + i % 4;
    const QuantumDataSet ds =
        random_dataset(rng, dim, rng.next_int(1, 3), rng.next_int(1, 3), rng.next_int(0, 2));
    const CentroidPair forward = centroids(ds);
    const CentroidPair swapped = centroids(ds.swapped_polarity());
    const double r_star = 0.55 + 0.05 * (i % 10);
    for (int q = 0; q < 4; ++q) {
      const DensityOperator sigma =
          random_density_operator(rng, dim, rng.next_int(1, dim));
      const ClassLabel a = classify(sigma, forward, SimilarityThreshold(r_star));
      const ClassLabel b = classify(sigma, swapped, SimilarityThreshold(r_star));
      ++comparisons;
      const bool swap_ok = (a == ClassLabel::positive && b == ClassLabel::negative) ||
                           (a == ClassLabel::negative && b == ClassLabel::positive) ||
                           (a == ClassLabel::indeterminate && b == ClassLabel::indeterminate);
      if (!swap_ok) {
        failure = "polarity violation at data set " + std::to_string(i);
        break;
      }
    }
  }

  const std::string detail = failure.empty()
                                 ? std::to_string(comparisons) +
                                       " label comparisons (sets <= 4 states, dims 2-4, "
                                       "r* grid 0.55..1.0): zero disagreements"
                                 : failure;
  return CheckResult{"classifier-oracle", failure.empty(), detail};
}

CheckResult check_witness(const Options& opt) {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  const PureState plus = PureState::normalized(Eigen::Vector2d(1.0, 1.0));

  const double f_zero_plus = fidelity(projector(zero), projector(plus));
  const double f_plus_one = fidelity(projector(plus), projector(one));
  const double f_zero_one = fidelity(projector(zero), projector(one));

  const bool passed = std::abs(f_zero_plus - 0.5) <= opt.witness_tol &&
                      std::abs(f_plus_one - 0.5) <= opt.witness_tol &&
                      std::abs(f_zero_one) <= opt.witness_tol &&
                      r_similar(projector(zero), projector(plus), SimilarityThreshold(0.5)) &&
                      r_similar(projector(plus), projector(one), SimilarityThreshold(0.5)) &&
                      !r_similar(projector(zero), projector(one), SimilarityThreshold(0.5));

  std::ostringstream detail;
  detail << "triple |0>, |+>, |1> at r=0.5: F = " << format_number(f_zero_plus) << " / "
         << format_number(f_plus_one) << " / " << format_number(f_zero_one)
         << " (similar, similar, not similar)";
  return CheckResult{"non-transitivity-witness", passed, detail.str()};
}

CheckResult check_music_fixtures(const Options& opt) {
  std::string failure;
  const music::EncodingConfig config;
  const auto& minor = op10n1_primary_theme();
  const auto& major = op10n1_major_theme();
  const std::int64_t span = music::resolve_span({minor, major}, config);

  const PureState minor_rhythm = music::encode_rhythmic(minor, config.grid, span);
  const PureState major_rhythm = music::encode_rhythmic(major, config.grid, span);
  const PureState minor_melody = music::encode_melodic(minor, config.melodic_length);
  const PureState major_melody = music::encode_melodic(major, config.melodic_length);

  const double rhythmic_f = fidelity_pure(minor_rhythm, major_rhythm);
  const double melodic_f = fidelity_pure(minor_melody, major_melody);

  if (std::abs(rhythmic_f - 1.0) > opt.rhythmic_identity_tol) {
    failure = "rhythmic fidelity " + format_number(rhythmic_f) + " not maximal";
  } else if (!(melodic_f < 1.0)) {
    failure = "melodic fidelity " + format_number(melodic_f) + " not strictly below 1";
  } else {
    const music::MusicalIdeaState a{minor_melody, minor_rhythm};
    const music::MusicalIdeaState b{major_melody, major_rhythm};
    const SimilarityThreshold r_star(0.9);
    if (!music::musical_similar(a, b, music::SimilarityMode::melodic, r_star) ||
        !music::musical_similar(a, b, music::SimilarityMode::rhythmic, r_star) ||
        !music::musical_similar(a, b, music::SimilarityMode::strong, r_star)) {
      failure = "strong similarity at r*=0.9 does not hold (melodic fidelity " +
                format_number(melodic_f) + ")";
    }
  }

  // Transposition invariance over seeded pitch rows.
  Rng rng(opt.seed ^ 0x4ULL);
  for (int i = 0; i < opt.transposition_themes && failure.empty(); ++i) {
    const int n = rng.next_int(2, 8);
    std::vector<std::optional<int>> pitches;
    std::vector<music::Rational> durations;
    for (int k = 0; k < n; ++k) {
      pitches.emplace_back(60 + rng.next_int(-12, 12));
      durations.emplace_back(rng.next_int(1, 4), 2);
    }
    const int shift = (i % 12 + 1) * ((i % 2 == 0) ? 1 : -1);
    std::vector<std::optional<int>> shifted;
    for (const auto& p : pitches) shifted.emplace_back(*p + shift);

    const auto theme = music::theme_from_pitches("t", pitches, durations, {4, 4});
    const auto transposed = music::theme_from_pitches("t", shifted, durations, {4, 4});
    const PureState original = music::encode_melodic(theme, config.melodic_length);
    const PureState moved = music::encode_melodic(transposed, config.melodic_length);
    if (!(original.amplitudes().array() == moved.amplitudes().array()).all()) {
      failure = "transposition by " + std::to_string(shift) +
                " changed the melodic encoding at theme " + std::to_string(i);
    }
  }

  std::ostringstream detail;
  if (!failure.empty()) {
    detail << failure;
  } else {
    detail << "op.10 n.1 pair: rhythmic fidelity " << format_number(rhythmic_f)
           << ", melodic fidelity " << format_number(melodic_f)
           << ", strong similarity holds at r*=0.9; " << opt.transposition_themes
           << " transposed themes bit-identical";
  }
  return CheckResult{"music-fixtures", failure.empty(), detail.str()};
}

CheckResult check_mcl_oracle(const Options& opt) {
  Rng rng(opt.seed ^ 0x5ULL);
  long comparisons = 0;
  std::string failure;

  for (int i = 0; i < opt.musical_datasets && failure.empty(); ++i) {
    // Distinct themes can encode identically (meter and trailing rests do not
    // reach the channels), so redraw until all labeled encodings differ.
    std::vector<std::pair<music::MusicalIdeaState, ClassLabel>> labeled;
    std::vector<music::AbstractTheme> queries;
    music::EncodingConfig config;
    while (true) {
      std::vector<music::AbstractTheme> themes;
      std::vector<ClassLabel> labels;
      const int n_pos = rng.next_int(1, 3);
      const int n_neg = rng.next_int(1, 3);
      const int n_ind = rng.next_int(0, 1);
      for (int k = 0; k < n_pos + n_neg + n_ind; ++k) {
        themes.push_back(random_theme(rng, "t" + std::to_string(k)));
        labels.push_back(k < n_pos           ? ClassLabel::positive
                         : k < n_pos + n_neg ? ClassLabel::negative
                                             : ClassLabel::indeterminate);
      }
      queries.clear();
      for (int k = 0; k < 2; ++k) queries.push_back(random_theme(rng, "query"));

      config = music::EncodingConfig{};
      std::vector<music::AbstractTheme> corpus = themes;
      corpus.insert(corpus.end(), queries.begin(), queries.end());
      config.span = music::resolve_span(corpus, config);

      labeled.clear();
      for (std::size_t k = 0; k < themes.size(); ++k) {
        labeled.emplace_back(music::encode_theme(themes[k], config), labels[k]);
      }
      bool distinct = true;
      for (std::size_t a = 0; a < labeled.size() && distinct; ++a) {
        for (std::size_t b = a + 1; b < labeled.size(); ++b) {
          if (labeled[a].first.approx_equal(labeled[b].first)) {
            distinct = false;
            break;
          }
        }
      }
      if (distinct) break;
    }
    const music::MusicalDataSet ds = music::MusicalDataSet::from_labeled(labeled);
    const music::MusicalCentroids mc = musical_centroids(ds);

    std::vector<music::MusicalIdeaState> probes;
    for (const auto& [idea, label] : labeled) probes.push_back(idea);
    for (const auto& q : queries) probes.push_back(music::encode_theme(q, config));

    const double r_star = 0.55 + 0.05 * (i % 10);
    for (const auto mode :
         {music::SimilarityMode::melodic, music::SimilarityMode::rhythmic,
          music::SimilarityMode::strong, music::SimilarityMode::weak}) {
      for (const auto& probe : probes) {
        const ClassLabel got =
            music::classify_theme(probe, mc, mode, SimilarityThreshold(r_star));
        const ClassLabel expected = literal_classify_theme(probe, mc, mode, r_star);
        ++comparisons;
        if (got != expected) {
          failure = std::string("disagreement at data set ") + std::to_string(i) +
                    ", mode " + music::to_string(mode) + ": got '" + to_char(got) +
                    "', oracle '" + to_char(expected) + "'";
          break;
        }
      }
      if (!failure.empty()) break;
    }
  }

  const std::string detail = failure.empty()
                                 ? std::to_string(comparisons) +
                                       " label comparisons over all four modes: zero "
                                       "disagreements"
                                 : failure;
  return CheckResult{"mcl-oracle", failure.empty(), detail};
}

}  // namespace

std::vector<CheckResult> run_selftest(const Options& options) {
  return {check_fidelity_axioms(options), check_encoding_roundtrip(options),
          check_classifier_oracle(options), check_witness(options),
          check_music_fixtures(options), check_mcl_oracle(options)};
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace qgestalt::selftest
