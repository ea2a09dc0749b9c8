// Python bindings for the core operations: encoding, fidelity, the
// three-valued classifier, and the musical pipeline.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgestalt/classifier.hpp"
#include "qgestalt/music.hpp"
#include "qgestalt/selftest.hpp"
#include "qgestalt/similarity.hpp"
#include "qgestalt/state.hpp"

namespace py = pybind11;
using namespace qgestalt;

namespace {

ClassLabel label_from_str(const std::string& token) {
  if (token.size() != 1) {
    throw error("unknown label token '" + token + "'; expected +, - or ?");
  }
  return label_from_char(token[0]);
}

std::string label_to_str(ClassLabel label) { return std::string(1, to_char(label)); }

QuantumDataSet dataset_from_rows(
    const std::vector<std::pair<Eigen::VectorXd, std::string>>& rows) {
  std::vector<std::pair<PureState, ClassLabel>> labeled;
  labeled.reserve(rows.size());
  for (const auto& [amplitudes, token] : rows) {
    labeled.emplace_back(PureState(amplitudes), label_from_str(token));
  }
  return build_dataset(labeled);
}

music::AbstractTheme theme_from_event_rows(
    const std::string& name,
    const std::vector<std::pair<std::optional<int>, std::pair<std::int64_t, std::int64_t>>>&
        events,
    std::pair<int, int> meter) {
  std::vector<music::ThemeEvent> list;
  list.reserve(events.size());
  for (const auto& [interval, duration] : events) {
    const music::Rational beats(duration.first, duration.second);
    list.push_back(interval ? music::ThemeEvent::note(*interval, beats)
                            : music::ThemeEvent::rest(beats));
  }
  return music::AbstractTheme(name, std::move(list), {meter.first, meter.second});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Quantum-inspired recognition: amplitude encoding, density-operator "
      "centroids, fidelity-based three-valued classification, and musical-theme "
      "similarity.";

  py::register_exception<error>(m, "QGestaltError", PyExc_ValueError);

  // --- states and density operators ---------------------------------------
  py::class_<PureState>(m, "PureState")
      .def(py::init<Eigen::VectorXd>(), py::arg("amplitudes"))
      .def_static("basis", &PureState::basis, py::arg("dimension"), py::arg("index"))
      .def_static("normalized", &PureState::normalized, py::arg("vector"))
      .def_property_readonly("amplitudes",
                             [](const PureState& s) { return s.amplitudes(); })
      .def_property_readonly("dimension", &PureState::dimension)
      .def("approx_equal", &PureState::approx_equal, py::arg("other"),
           py::arg("tol") = kStateEqTol);

  py::class_<DensityOperator>(m, "DensityOperator")
      .def(py::init<Eigen::MatrixXd>(), py::arg("matrix"))
      .def_property_readonly("matrix",
                             [](const DensityOperator& d) { return d.matrix(); })
      .def_property_readonly("dimension", &DensityOperator::dimension)
      .def_property_readonly("trace", &DensityOperator::trace);

  m.def(
      "amplitude_encode",
      [](const Eigen::VectorXd& x) { return amplitude_encode(FeatureVector(x)); },
      py::arg("features"),
      "Encode (x_1..x_d) as the unit vector (x_1..x_d,1)/norm in dimension d+1.");
  m.def(
      "decode_features",
      [](const PureState& psi) { return decode_features(psi).values(); },
      py::arg("state"), "Invert amplitude_encode on its image.");
  m.def("projector", &projector, py::arg("state"));
  m.def("mixture", &mixture, py::arg("states"), py::arg("weights"));
  m.def("spectral_sqrt", &spectral_sqrt, py::arg("rho"));

  // --- similarity ----------------------------------------------------------
  m.def("fidelity_pure", &fidelity_pure, py::arg("psi"), py::arg("phi"));
  m.def("fidelity", &fidelity, py::arg("rho"), py::arg("sigma"));
  m.def(
      "r_similar",
      [](const DensityOperator& rho, const DensityOperator& sigma, double r) {
        return r_similar(rho, sigma, SimilarityThreshold(r));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("r"));

  // --- classifier ----------------------------------------------------------
  py::class_<QuantumDataSet>(m, "QuantumDataSet")
      .def(py::init(&dataset_from_rows), py::arg("labeled"),
           "Build from [(amplitudes, '+'|'-'|'?'), ...].")
      .def_property_readonly("dimension", &QuantumDataSet::dimension)
      .def_property_readonly("n_positive", &QuantumDataSet::n_positive)
      .def_property_readonly("n_negative", &QuantumDataSet::n_negative)
      .def_property_readonly("n_indeterminate", &QuantumDataSet::n_indeterminate)
      .def("swapped_polarity", &QuantumDataSet::swapped_polarity);

  py::class_<CentroidPair>(m, "CentroidPair")
      .def(py::init<DensityOperator, DensityOperator>(), py::arg("positive"),
           py::arg("negative"))
      .def_property_readonly("positive", &CentroidPair::positive)
      .def_property_readonly("negative", &CentroidPair::negative);

  m.def("positive_centroid", &positive_centroid, py::arg("dataset"));
  m.def("negative_centroid", &negative_centroid, py::arg("dataset"));
  m.def("centroids", &centroids, py::arg("dataset"));
  m.def(
      "classical_centroid",
      [](const std::vector<Eigen::VectorXd>& points) {
        std::vector<FeatureVector> features;
        features.reserve(points.size());
        for (const auto& p : points) features.emplace_back(p);
        return classical_centroid(features).values();
      },
      py::arg("points"), "Componentwise mean of feature vectors.");
  m.def(
      "classify",
      [](const DensityOperator& sigma, const CentroidPair& cp, double r_star) {
        return label_to_str(classify(sigma, cp, SimilarityThreshold(r_star)));
      },
      py::arg("sigma"), py::arg("centroids"), py::arg("r_star"),
      "Three-valued label: '+', '-' or '?'.");
  m.def(
      "classify_batch",
      [](const std::vector<DensityOperator>& states, const CentroidPair& cp,
         double r_star) {
        std::vector<std::string> labels;
        for (ClassLabel l : classify_batch(states, cp, SimilarityThreshold(r_star))) {
          labels.push_back(label_to_str(l));
        }
        return labels;
      },
      py::arg("states"), py::arg("centroids"), py::arg("r_star"));

  // --- music ---------------------------------------------------------------
  py::class_<music::AbstractTheme>(m, "AbstractTheme")
      .def(py::init(&theme_from_event_rows), py::arg("name"), py::arg("events"),
           py::arg("meter"),
           "events: [(interval_or_None, (num, den)), ...] with durations in beats.")
      .def_property_readonly("name", &music::AbstractTheme::name)
      .def_property_readonly("sounding_count", &music::AbstractTheme::sounding_count)
      .def_property_readonly("events", [](const music::AbstractTheme& t) {
        std::vector<std::pair<std::optional<int>, std::pair<std::int64_t, std::int64_t>>>
            rows;
        for (const auto& e : t.events()) {
          rows.emplace_back(e.interval,
                            std::make_pair(e.duration.num(), e.duration.den()));
        }
        return rows;
      });

  m.def(
      "parse_theme",
      [](const std::string& text, const std::string& name) {
        return music::parse_theme(text, name);
      },
      py::arg("text"), py::arg("name") = "theme");
  m.def(
      "theme_from_pitches",
      [](const std::string& name, const std::vector<std::optional<int>>& pitches,
         const std::vector<std::pair<std::int64_t, std::int64_t>>& durations,
         std::pair<int, int> meter) {
        std::vector<music::Rational> beats;
        beats.reserve(durations.size());
        for (const auto& [num, den] : durations) beats.emplace_back(num, den);
        return music::theme_from_pitches(name, pitches, beats,
                                         {meter.first, meter.second});
      },
      py::arg("name"), py::arg("pitches"), py::arg("durations"), py::arg("meter"));
  m.def("encode_melodic", &music::encode_melodic, py::arg("theme"), py::arg("length"));
  m.def("encode_rhythmic", &music::encode_rhythmic, py::arg("theme"), py::arg("grid"),
        py::arg("span"));
  m.def("total_ticks", &music::total_ticks, py::arg("theme"), py::arg("grid"));

  py::class_<music::MusicalIdeaState>(m, "MusicalIdeaState")
      .def(py::init<PureState, PureState>(), py::arg("melodic"), py::arg("rhythmic"))
      .def_readonly("melodic", &music::MusicalIdeaState::melodic)
      .def_readonly("rhythmic", &music::MusicalIdeaState::rhythmic);

  m.def(
      "encode_theme",
      [](const music::AbstractTheme& theme, int melodic_length, int grid,
         std::int64_t span) {
        return music::encode_theme(theme, {melodic_length, grid, span});
      },
      py::arg("theme"), py::arg("melodic_length") = 16, py::arg("grid") = 4,
      py::arg("span"));
  m.def(
      "resolve_span",
      [](const std::vector<music::AbstractTheme>& corpus, int grid) {
        music::EncodingConfig config;
        config.grid = grid;
        return music::resolve_span(corpus, config);
      },
      py::arg("corpus"), py::arg("grid") = 4);

  py::class_<music::MusicalDataSet>(m, "MusicalDataSet")
      .def(py::init([](const std::vector<std::pair<music::MusicalIdeaState, std::string>>&
                           rows) {
             std::vector<std::pair<music::MusicalIdeaState, ClassLabel>> labeled;
             labeled.reserve(rows.size());
             for (const auto& [idea, token] : rows) {
               labeled.emplace_back(idea, label_from_str(token));
             }
             return music::MusicalDataSet::from_labeled(labeled);
           }),
           py::arg("labeled"), "Build from [(MusicalIdeaState, '+'|'-'|'?'), ...].")
      .def("swapped_polarity", &music::MusicalDataSet::swapped_polarity);

  py::class_<music::MusicalCentroids>(m, "MusicalCentroids")
      .def_property_readonly("melodic_positive", &music::MusicalCentroids::melodic_positive)
      .def_property_readonly("rhythmic_positive",
                             &music::MusicalCentroids::rhythmic_positive)
      .def_property_readonly("melodic_negative", &music::MusicalCentroids::melodic_negative)
      .def_property_readonly("rhythmic_negative",
                             &music::MusicalCentroids::rhythmic_negative);

  m.def("musical_centroids", &music::musical_centroids, py::arg("dataset"));
  m.def(
      "musical_similar",
      [](const music::MusicalIdeaState& a, const music::MusicalIdeaState& b,
         const std::string& mode, double r) {
        return music::musical_similar(a, b, music::mode_from_string(mode),
                                      SimilarityThreshold(r));
      },
      py::arg("a"), py::arg("b"), py::arg("mode"), py::arg("r"),
      "mode: melodic | rhythmic | strong | weak");
  m.def(
      "classify_theme",
      [](const music::MusicalIdeaState& idea, const music::MusicalCentroids& centroids,
         const std::string& mode, double r_star) {
        return label_to_str(music::classify_theme(
            idea, centroids, music::mode_from_string(mode), SimilarityThreshold(r_star)));
      },
      py::arg("idea"), py::arg("centroids"), py::arg("mode"), py::arg("r_star"));

  // --- selftest ------------------------------------------------------------
  m.def(
      "run_selftest",
      [](std::uint64_t seed) {
        selftest::Options options;
        options.seed = seed;
        std::vector<std::tuple<std::string, bool, std::string>> rows;
        for (const auto& r : selftest::run_selftest(options)) {
          rows.emplace_back(r.group, r.passed, r.detail);
        }
        return rows;
      },
      py::arg("seed") = selftest::kDefaultSeed,
      "Run the verification groups; returns [(group, passed, detail), ...].");

  m.attr("__version__") = "0.1.0";
}
