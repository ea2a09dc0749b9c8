// qgestalt CLI: encode feature vectors, build centroids, run the three-valued
// classifier over CSV data sets, query similarities, classify musical themes,
// and run the built-in verification suite.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgestalt/classifier.hpp"
#include "qgestalt/music.hpp"
#include "qgestalt/selftest.hpp"
#include "qgestalt/similarity.hpp"
#include "qgestalt/state.hpp"

namespace fs = std::filesystem;
using namespace qgestalt;

namespace {

struct CliConfig {
  double threshold = 0.9;
  std::string mode = "strong";
  int melodic_len = 16;
  int grid = 4;
  std::int64_t span = 0;  // 0 = derive from the corpus
  std::string format = "text";
  std::string output;  // empty = stdout
};

std::string fmt_fidelity(double f) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12f", f);
  return buffer;
}

std::string fmt_value(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Fn>
int with_output(const CliConfig& config, Fn&& write) {
  if (config.output.empty()) {
    write(std::cout);
    return 0;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) {
    throw error("cannot open output file '" + config.output + "'");
  }
  write(out);
  return 0;
}

// ---------------------------------------------------------------------------
// Feature CSV: header `f1,...,fd[,label]`, one row of d decimals (+ label).
// ---------------------------------------------------------------------------

struct FeatureCsv {
  bool labeled = false;
  std::vector<FeatureVector> features;
  std::vector<ClassLabel> labels;
  int dimension = 0;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  for (std::string& f : fields) {
    const auto begin = f.find_first_not_of(" \t");
    const auto end = f.find_last_not_of(" \t");
    f = (begin == std::string::npos) ? "" : f.substr(begin, end - begin + 1);
  }
  return fields;
}

double parse_decimal(const std::string& text, const std::string& path, int line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw error(path + ":" + std::to_string(line_no) + ": malformed number '" + text + "'");
  }
  return v;
}

FeatureCsv read_feature_csv(const std::string& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) {
    throw error(path + ": empty file, expected a header line");
  }
  ++line_no;
  std::vector<std::string> header = split_csv_line(line);
  FeatureCsv csv;
  csv.labeled = !header.empty() && header.back() == "label";
  const int d = static_cast<int>(header.size()) - (csv.labeled ? 1 : 0);
  if (d < 1) {
    throw error(path + ":1: header needs at least one feature column");
  }
  for (int k = 0; k < d; ++k) {
    if (header[k] != "f" + std::to_string(k + 1)) {
      throw error(path + ":1: expected header column 'f" + std::to_string(k + 1) +
                  "', got '" + header[k] + "'");
    }
  }
  csv.dimension = d;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    const std::size_t expected = static_cast<std::size_t>(d) + (csv.labeled ? 1 : 0);
    if (fields.size() != expected) {
      throw error(path + ":" + std::to_string(line_no) + ": expected " +
                  std::to_string(expected) + " fields, got " +
                  std::to_string(fields.size()));
    }
    std::vector<double> values;
    values.reserve(d);
    for (int k = 0; k < d; ++k) {
      values.push_back(parse_decimal(fields[k], path, line_no));
    }
    csv.features.emplace_back(values);
    if (csv.labeled) {
      const std::string& token = fields.back();
      if (token.size() != 1) {
        throw error(path + ":" + std::to_string(line_no) + ": unknown label token '" +
                    token + "'");
      }
      try {
        csv.labels.push_back(label_from_char(token[0]));
      } catch (const error&) {
        throw error(path + ":" + std::to_string(line_no) + ": unknown label token '" +
                    token + "'");
      }
    }
  }
  return csv;
}

std::vector<std::pair<FeatureVector, ClassLabel>> ingest_features(const std::string& path) {
  const FeatureCsv csv = read_feature_csv(path);
  if (!csv.labeled) {
    throw error(path + ": data set requires a trailing 'label' column");
  }
  if (csv.features.empty()) {
    throw error(path + ": empty data set (header only)");
  }
  std::vector<std::pair<FeatureVector, ClassLabel>> rows;
  rows.reserve(csv.features.size());
  for (std::size_t i = 0; i < csv.features.size(); ++i) {
    rows.emplace_back(csv.features[i], csv.labels[i]);
  }
  return rows;
}

FeatureCsv read_query_csv(const std::string& path) {
  const FeatureCsv csv = read_feature_csv(path);
  if (csv.labeled) {
    throw error(path + ": query file must not carry a label column");
  }
  return csv;
}

CentroidPair centroids_from_csv(const std::string& path) {
  std::vector<std::pair<PureState, ClassLabel>> labeled;
  for (const auto& [features, label] : ingest_features(path)) {
    labeled.emplace_back(amplitude_encode(features), label);
  }
  return centroids(build_dataset(labeled));
}

// ---------------------------------------------------------------------------
// Theme manifest: one `<label> <theme-path>` per line, paths relative to the
// manifest file.
// ---------------------------------------------------------------------------

std::vector<std::pair<ClassLabel, fs::path>> read_manifest(const std::string& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  const fs::path base = fs::path(path).parent_path();
  std::vector<std::pair<ClassLabel, fs::path>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string label_token;
    if (!(fields >> label_token)) continue;
    std::string rest;
    std::getline(fields, rest);
    const auto begin = rest.find_first_not_of(" \t");
    const auto end = rest.find_last_not_of(" \t\r");
    if (label_token.size() != 1 || begin == std::string::npos) {
      throw error(path + ":" + std::to_string(line_no) +
                  ": expected '<label> <theme-path>'");
    }
    entries.emplace_back(label_from_char(label_token[0]),
                         base / rest.substr(begin, end - begin + 1));
  }
  if (entries.empty()) {
    throw error(path + ": empty manifest");
  }
  return entries;
}

music::AbstractTheme load_theme(const fs::path& path) {
  return music::parse_theme(read_file(path.string()), path.stem().string());
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_encode(const CliConfig& config, const std::string& input) {
  const FeatureCsv csv = read_feature_csv(input);
  std::vector<PureState> states;
  states.reserve(csv.features.size());
  for (const auto& f : csv.features) states.push_back(amplitude_encode(f));

  return with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "id";
      for (int k = 0; k <= csv.dimension; ++k) out << ",psi_" << (k + 1);
      if (csv.labeled) out << ",label";
      out << "\n";
      for (std::size_t i = 0; i < states.size(); ++i) {
        out << i;
        for (Eigen::Index k = 0; k < states[i].dimension(); ++k) {
          out << ',' << fmt_value(states[i][k]);
        }
        if (csv.labeled) out << ',' << to_char(csv.labels[i]);
        out << "\n";
      }
    } else {
      for (std::size_t i = 0; i < states.size(); ++i) {
        out << "row " << i << ": (";
        for (Eigen::Index k = 0; k < states[i].dimension(); ++k) {
          out << (k ? ", " : "") << fmt_value(states[i][k]);
        }
        out << ")";
        if (csv.labeled) out << " label=" << to_char(csv.labels[i]);
        out << "\n";
      }
      if (states.empty()) out << "no rows\n";
    }
  });
}

void write_matrix_text(std::ostream& out, const std::string& title,
                       const Eigen::MatrixXd& m) {
  out << title << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << fmt_value(m(i, j));
    }
    out << "\n";
  }
}

int cmd_centroid(const CliConfig& config, const std::string& dataset_path) {
  const auto rows = ingest_features(dataset_path);
  std::vector<std::pair<PureState, ClassLabel>> labeled;
  std::vector<FeatureVector> positive_features, negative_features;
  for (const auto& [features, label] : rows) {
    labeled.emplace_back(amplitude_encode(features), label);
    if (label == ClassLabel::positive) positive_features.push_back(features);
    if (label == ClassLabel::negative) negative_features.push_back(features);
  }
  const QuantumDataSet ds = build_dataset(labeled);
  const CentroidPair cp = centroids(ds);
  const FeatureVector classical_positive = classical_centroid(positive_features);
  const FeatureVector classical_negative = classical_centroid(negative_features);

  return with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "kind,side,i,j,value\n";
      const auto write_quantum = [&](const char* side, const Eigen::MatrixXd& m) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << "quantum," << side << ',' << i << ',' << j << ','
                << fmt_value(m(i, j)) << "\n";
          }
        }
      };
      const auto write_classical = [&](const char* side, const FeatureVector& v) {
        for (Eigen::Index i = 0; i < v.dimension(); ++i) {
          out << "classical," << side << ',' << i << ",," << fmt_value(v[i]) << "\n";
        }
      };
      write_quantum("positive", cp.positive().matrix());
      write_quantum("negative", cp.negative().matrix());
      write_classical("positive", classical_positive);
      write_classical("negative", classical_negative);
    } else {
      out << "instances: " << ds.n_positive() << "+ / " << ds.n_negative() << "- / "
          << ds.n_indeterminate() << "?\n";
      write_matrix_text(out, "quantum positive centroid", cp.positive().matrix());
      write_matrix_text(out, "quantum negative centroid", cp.negative().matrix());
      out << "classical positive centroid: (";
      for (Eigen::Index i = 0; i < classical_positive.dimension(); ++i) {
        out << (i ? ", " : "") << fmt_value(classical_positive[i]);
      }
      out << ")\nclassical negative centroid: (";
      for (Eigen::Index i = 0; i < classical_negative.dimension(); ++i) {
        out << (i ? ", " : "") << fmt_value(classical_negative[i]);
      }
      out << ")\n";
    }
  });
}

int cmd_classify(const CliConfig& config, const std::string& dataset_path,
                 const std::string& query_path) {
  const CentroidPair cp = centroids_from_csv(dataset_path);
  const FeatureCsv query = read_query_csv(query_path);
  const SimilarityThreshold r_star(config.threshold);

  struct Row {
    double fidelity_positive;
    double fidelity_negative;
    ClassLabel label;
  };
  std::vector<Row> report;
  report.reserve(query.features.size());
  for (const auto& features : query.features) {
    const DensityOperator sigma = projector(amplitude_encode(features));
    report.push_back(Row{fidelity(sigma, cp.positive()), fidelity(sigma, cp.negative()),
                         classify(sigma, cp, r_star)});
  }

  return with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "id,fidelity_positive,fidelity_negative,label\n";
      for (std::size_t i = 0; i < report.size(); ++i) {
        out << i << ',' << fmt_fidelity(report[i].fidelity_positive) << ','
            << fmt_fidelity(report[i].fidelity_negative) << ','
            << to_char(report[i].label) << "\n";
      }
    } else {
      for (std::size_t i = 0; i < report.size(); ++i) {
        out << "query " << i << ": F+ = " << fmt_fidelity(report[i].fidelity_positive)
            << "  F- = " << fmt_fidelity(report[i].fidelity_negative)
            << "  label = " << to_char(report[i].label) << "\n";
      }
      if (report.empty()) out << "no queries\n";
    }
  });
}

int cmd_similarity(const CliConfig& config, const std::string& query_path) {
  const FeatureCsv query = read_query_csv(query_path);
  const SimilarityThreshold r(config.threshold);
  std::vector<DensityOperator> states;
  states.reserve(query.features.size());
  for (const auto& f : query.features) states.push_back(projector(amplitude_encode(f)));

  return with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "id_a,id_b,fidelity,similar\n";
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
          const double f = fidelity(states[i], states[j]);
          out << i << ',' << j << ',' << fmt_fidelity(f) << ','
              << (r_similar(states[i], states[j], r) ? "true" : "false") << "\n";
        }
      }
    } else {
      bool any = false;
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
          any = true;
          const double f = fidelity(states[i], states[j]);
          out << "rows " << i << "," << j << ": F = " << fmt_fidelity(f) << "  "
              << (r_similar(states[i], states[j], r) ? "similar" : "not similar")
              << " at r = " << fmt_value(r.value()) << "\n";
        }
      }
      if (!any) out << "fewer than two rows, nothing to compare\n";
    }
  });
}

int cmd_music_similarity(const CliConfig& config, const std::string& path_a,
                         const std::string& path_b) {
  const music::AbstractTheme a = load_theme(path_a);
  const music::AbstractTheme b = load_theme(path_b);
  music::EncodingConfig enc{config.melodic_len, config.grid, config.span};
  enc.span = music::resolve_span({a, b}, enc);
  const music::MusicalIdeaState ia = music::encode_theme(a, enc);
  const music::MusicalIdeaState ib = music::encode_theme(b, enc);
  const SimilarityThreshold r(config.threshold);

  const double melodic_f = fidelity_pure(ia.melodic, ib.melodic);
  const double rhythmic_f = fidelity_pure(ia.rhythmic, ib.rhythmic);
  const bool sim_melodic = music::musical_similar(ia, ib, music::SimilarityMode::melodic, r);
  const bool sim_rhythmic =
      music::musical_similar(ia, ib, music::SimilarityMode::rhythmic, r);
  const bool sim_strong = music::musical_similar(ia, ib, music::SimilarityMode::strong, r);
  const bool sim_weak = music::musical_similar(ia, ib, music::SimilarityMode::weak, r);

  return with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "melodic_fidelity,rhythmic_fidelity,melodic,rhythmic,strong,weak\n"
          << fmt_fidelity(melodic_f) << ',' << fmt_fidelity(rhythmic_f) << ','
          << (sim_melodic ? "true" : "false") << ',' << (sim_rhythmic ? "true" : "false")
          << ',' << (sim_strong ? "true" : "false") << ',' << (sim_weak ? "true" : "false")
          << "\n";
    } else {
      out << a.name() << " vs " << b.name() << " at r = " << fmt_value(r.value()) << "\n"
          << "  melodic fidelity:  " << fmt_fidelity(melodic_f)
          << (sim_melodic ? "  (similar)" : "  (not similar)") << "\n"
          << "  rhythmic fidelity: " << fmt_fidelity(rhythmic_f)
          << (sim_rhythmic ? "  (similar)" : "  (not similar)") << "\n"
          << "  strong: " << (sim_strong ? "yes" : "no")
          << "   weak: " << (sim_weak ? "yes" : "no") << "\n";
    }
  });
}

int cmd_music_classify(const CliConfig& config, const std::string& manifest_path,
                       const std::vector<std::string>& query_paths) {
  const auto entries = read_manifest(manifest_path);
  std::vector<music::AbstractTheme> corpus;
  std::vector<ClassLabel> labels;
  for (const auto& [label, theme_path] : entries) {
    corpus.push_back(load_theme(theme_path));
    labels.push_back(label);
  }
  std::vector<music::AbstractTheme> queries;
  for (const auto& q : query_paths) queries.push_back(load_theme(q));

  music::EncodingConfig enc{config.melodic_len, config.grid, config.span};
  std::vector<music::AbstractTheme> all = corpus;
  all.insert(all.end(), queries.begin(), queries.end());
  enc.span = music::resolve_span(all, enc);

  std::vector<std::pair<music::MusicalIdeaState, ClassLabel>> labeled;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    labeled.emplace_back(music::encode_theme(corpus[i], enc), labels[i]);
  }
  const music::MusicalCentroids mc =
      music::musical_centroids(music::MusicalDataSet::from_labeled(labeled));
  const music::SimilarityMode mode = music::mode_from_string(config.mode);
  const SimilarityThreshold r_star(config.threshold);

  struct Row {
    std::string id;
    double mel_pos, rhy_pos, mel_neg, rhy_neg;
    ClassLabel label;
  };
  std::vector<Row> report;
  for (const auto& theme : queries) {
    const music::MusicalIdeaState idea = music::encode_theme(theme, enc);
    const DensityOperator mel = projector(idea.melodic);
    const DensityOperator rhy = projector(idea.rhythmic);
    report.push_back(Row{theme.name(), fidelity(mel, mc.melodic_positive()),
                         fidelity(rhy, mc.rhythmic_positive()),
                         fidelity(mel, mc.melodic_negative()),
                         fidelity(rhy, mc.rhythmic_negative()),
                         music::classify_theme(idea, mc, mode, r_star)});
  }

  return with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "id,melodic_fidelity_positive,rhythmic_fidelity_positive,"
             "melodic_fidelity_negative,rhythmic_fidelity_negative,label\n";
      for (const Row& row : report) {
        out << row.id << ',' << fmt_fidelity(row.mel_pos) << ','
            << fmt_fidelity(row.rhy_pos) << ',' << fmt_fidelity(row.mel_neg) << ','
            << fmt_fidelity(row.rhy_neg) << ',' << to_char(row.label) << "\n";
      }
    } else {
      for (const Row& row : report) {
        out << row.id << ": F+(mel) = " << fmt_fidelity(row.mel_pos)
            << "  F+(rhy) = " << fmt_fidelity(row.rhy_pos)
            << "  F-(mel) = " << fmt_fidelity(row.mel_neg)
            << "  F-(rhy) = " << fmt_fidelity(row.rhy_neg)
            << "  label = " << to_char(row.label) << "\n";
      }
      if (report.empty()) out << "no queries\n";
    }
  });
}

int cmd_selftest(const CliConfig& config) {
  selftest::Options options;
  if (const char* env_seed = std::getenv("QGESTALT_SEED")) {
    const std::string text(env_seed);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw error("QGESTALT_SEED must be an unsigned integer, got '" + text + "'");
    }
    options.seed = seed;
  }
  const auto results = selftest::run_selftest(options);
  const bool ok = selftest::all_passed(results);

  with_output(config, [&](std::ostream& out) {
    if (config.format == "csv") {
      out << "group,passed,detail\n";
      for (const auto& r : results) {
        std::string detail = r.detail;
        for (char& c : detail) {
          if (c == ',') c = ';';
        }
        out << r.group << ',' << (r.passed ? "true" : "false") << ',' << detail << "\n";
      }
    } else {
      for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.group << ": " << r.detail
            << "\n";
      }
      out << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
  });
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quantum-inspired recognition: amplitude encoding, density-operator "
      "centroids, fidelity-based three-valued classification, and musical-theme "
      "similarity"};
  app.require_subcommand(1);

  CliConfig config;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threshold", config.threshold,
                    "similarity threshold r (classification needs 1/2 < r <= 1)")
        ->capture_default_str();
    cmd->add_option("--format", config.format, "report format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", config.output, "write the report to a file");
  };
  const auto add_music = [&](CLI::App* cmd) {
    cmd->add_option("--mode", config.mode, "similarity mode")
        ->check(CLI::IsMember({"melodic", "rhythmic", "strong", "weak"}))
        ->capture_default_str();
    cmd->add_option("--melodic-len", config.melodic_len, "melodic feature length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--grid", config.grid, "rhythm grid, ticks per beat")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--span", config.span,
                    "rhythm span in ticks (0 = largest theme in the run)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };

  std::string input, dataset_path, query_path, theme_a, theme_b, manifest_path;
  std::vector<std::string> query_themes;

  CLI::App* encode = app.add_subcommand("encode", "amplitude-encode a feature CSV");
  encode->add_option("input", input, "feature CSV (with or without labels)")->required();
  add_common(encode);

  CLI::App* centroid =
      app.add_subcommand("centroid", "build quantum and classical centroids");
  centroid->add_option("dataset", dataset_path, "labeled feature CSV")->required();
  add_common(centroid);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "three-valued classification of query rows");
  classify_cmd->add_option("dataset", dataset_path, "labeled feature CSV")->required();
  classify_cmd->add_option("query", query_path, "unlabeled feature CSV")->required();
  add_common(classify_cmd);

  CLI::App* similarity_cmd =
      app.add_subcommand("similarity", "pairwise fidelities of query rows");
  similarity_cmd->add_option("query", query_path, "unlabeled feature CSV")->required();
  add_common(similarity_cmd);

  CLI::App* music_similarity =
      app.add_subcommand("music-similarity", "channel fidelities of two themes");
  music_similarity->add_option("theme_a", theme_a, "theme file")->required();
  music_similarity->add_option("theme_b", theme_b, "theme file")->required();
  add_common(music_similarity);
  add_music(music_similarity);

  CLI::App* music_classify =
      app.add_subcommand("music-classify", "classify themes against a labeled corpus");
  music_classify->add_option("manifest", manifest_path, "manifest of '<label> <theme>' lines")
      ->required();
  music_classify->add_option("queries", query_themes, "theme files to classify");
  add_common(music_classify);
  add_music(music_classify);

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the built-in verification suite");
  add_common(selftest_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode) return cmd_encode(config, input);
    if (*centroid) return cmd_centroid(config, dataset_path);
    if (*classify_cmd) return cmd_classify(config, dataset_path, query_path);
    if (*similarity_cmd) return cmd_similarity(config, query_path);
    if (*music_similarity) return cmd_music_similarity(config, theme_a, theme_b);
    if (*music_classify) return cmd_music_classify(config, manifest_path, query_themes);
    if (*selftest_cmd) return cmd_selftest(config);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
