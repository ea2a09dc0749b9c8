// End-to-end tests of the command-line tool: every report a run produces must
// agree with the library called on the same parsed values, runs must be
// deterministic, and the exit-code contract must hold.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qgestalt/classifier.hpp"
#include "qgestalt/music.hpp"
#include "qgestalt/selftest.hpp"
#include "qgestalt/state.hpp"

namespace fs = std::filesystem;
using namespace qgestalt;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "qgestalt_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const fs::path out = scratch_dir() / "stdout.txt";
  const std::string command = env + (env.empty() ? "" : " ") + QGESTALT_CLI_BIN + " " +
                              args + " > " + out.string() + " 2> " +
                              (scratch_dir() / "stderr.txt").string();
  const int status = std::system(command.c_str());
  return RunResult{WEXITSTATUS(status), read_file(out)};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
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
    rows.push_back(fields);
  }
  return rows;
}

const std::string kDataset =
    "f1,f2,label\n"
    "1.0,2.0,+\n"
    "1.1,1.9,+\n"
    "-1.0,-2.0,-\n"
    "-0.9,-2.1,-\n"
    "0.0,0.1,?\n";

fs::path dataset_path() {
  const fs::path p = scratch_dir() / "dataset.csv";
  write_file(p, kDataset);
  return p;
}

CentroidPair library_centroids() {
  std::vector<std::pair<PureState, ClassLabel>> labeled = {
      {amplitude_encode(FeatureVector({1.0, 2.0})), ClassLabel::positive},
      {amplitude_encode(FeatureVector({1.1, 1.9})), ClassLabel::positive},
      {amplitude_encode(FeatureVector({-1.0, -2.0})), ClassLabel::negative},
      {amplitude_encode(FeatureVector({-0.9, -2.1})), ClassLabel::negative},
      {amplitude_encode(FeatureVector({0.0, 0.1})), ClassLabel::indeterminate}};
  return centroids(build_dataset(labeled));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify report agrees with the library on 50 synthetic queries") {
  selftest::Rng rng(61);
  std::ostringstream query;
  std::vector<FeatureVector> features;
  query << "f1,f2\n";
  for (int i = 0; i < 50; ++i) {
    char a[32], b[32];
    std::snprintf(a, sizeof(a), "%.6f", rng.next_range(-3, 3));
    std::snprintf(b, sizeof(b), "%.6f", rng.next_range(-3, 3));
    query << a << ',' << b << "\n";
    // The library side parses the same decimal text the CLI reads.
    features.emplace_back(std::vector<double>{std::stod(a), std::stod(b)});
  }
  const fs::path qp = scratch_dir() / "query50.csv";
  write_file(qp, query.str());

  const RunResult run = run_cli("classify " + dataset_path().string() + " " + qp.string() +
                                " --threshold 0.85 --format csv");
  REQUIRE(run.exit_code == 0);
  const auto rows = parse_csv(run.output);
  REQUIRE(rows.size() == 51);  // header + 50
  CHECK(rows[0] == std::vector<std::string>{"id", "fidelity_positive",
                                            "fidelity_negative", "label"});

  const CentroidPair cp = library_centroids();
  std::vector<DensityOperator> queries;
  for (const auto& f : features) queries.push_back(projector(amplitude_encode(f)));
  const std::vector<ClassLabel> expected =
      classify_batch(queries, cp, SimilarityThreshold(0.85));

  for (int i = 0; i < 50; ++i) {
    const auto& row = rows[i + 1];
    CHECK(row[0] == std::to_string(i));
    CHECK(row[3].size() == 1);
    CHECK(row[3][0] == to_char(expected[i]));
    CHECK(std::abs(std::stod(row[1]) - fidelity(queries[i], cp.positive())) <= 1e-9);
    CHECK(std::abs(std::stod(row[2]) - fidelity(queries[i], cp.negative())) <= 1e-9);
  }
}

TEST_CASE("classify runs are byte-identical") {
  const fs::path qp = scratch_dir() / "query.csv";
  write_file(qp, "f1,f2\n1.05,1.95\n-0.95,-2.05\n0.0,0.0\n");
  const std::string args = "classify " + dataset_path().string() + " " + qp.string() +
                           " --format csv";
  const RunResult first = run_cli(args, "QGESTALT_SEED=42");
  const RunResult second = run_cli(args, "QGESTALT_SEED=42");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(!first.output.empty());
}

TEST_CASE("classify writes the report to --output") {
  const fs::path qp = scratch_dir() / "query1.csv";
  write_file(qp, "f1,f2\n1.0,2.0\n");
  const fs::path report = scratch_dir() / "report.csv";
  const RunResult run = run_cli("classify " + dataset_path().string() + " " + qp.string() +
                                " --format csv --output " + report.string());
  CHECK(run.exit_code == 0);
  CHECK(run.output.empty());
  const auto rows = parse_csv(read_file(report));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][3] == "+");
}

TEST_CASE("empty query file produces an empty report and exit 0") {
  const fs::path qp = scratch_dir() / "empty.csv";
  write_file(qp, "f1,f2\n");
  const RunResult run = run_cli("classify " + dataset_path().string() + " " + qp.string() +
                                " --format csv");
  CHECK(run.exit_code == 0);
  const auto rows = parse_csv(run.output);
  REQUIRE(rows.size() == 1);  // header only
}

TEST_CASE("error paths exit nonzero") {
  const fs::path qp = scratch_dir() / "query1b.csv";
  write_file(qp, "f1,f2\n1.0,2.0\n");

  // Header-only data set.
  const fs::path empty_ds = scratch_dir() / "empty_ds.csv";
  write_file(empty_ds, "f1,f2,label\n");
  CHECK(run_cli("classify " + empty_ds.string() + " " + qp.string()).exit_code != 0);

  // Unknown label token.
  const fs::path bad_label = scratch_dir() / "bad_label.csv";
  write_file(bad_label, "f1,f2,label\n1.0,2.0,x\n");
  CHECK(run_cli("centroid " + bad_label.string()).exit_code != 0);

  // Malformed number.
  const fs::path bad_number = scratch_dir() / "bad_number.csv";
  write_file(bad_number, "f1,f2,label\n1.0,two,+\n");
  CHECK(run_cli("centroid " + bad_number.string()).exit_code != 0);

  // Query carrying labels.
  const fs::path labeled_query = scratch_dir() / "labeled_query.csv";
  write_file(labeled_query, "f1,f2,label\n1.0,2.0,+\n");
  CHECK(run_cli("classify " + dataset_path().string() + " " + labeled_query.string())
            .exit_code != 0);

  // Classification threshold outside (1/2, 1].
  CHECK(run_cli("classify " + dataset_path().string() + " " + qp.string() +
                " --threshold 0.5")
            .exit_code != 0);

  // Missing file.
  CHECK(run_cli("centroid " + (scratch_dir() / "missing.csv").string()).exit_code != 0);

  // Unknown subcommand.
  CHECK(run_cli("frobnicate").exit_code != 0);

  // Threshold outside [0, 1] for the generic similarity relation.
  write_file(scratch_dir() / "two.csv", "f1\n1.0\n2.0\n");
  CHECK(run_cli("similarity " + (scratch_dir() / "two.csv").string() +
                " --threshold 1.5")
            .exit_code != 0);

  // Explicit rhythm span too small for the themes.
  const std::string themes = QGESTALT_DATA_DIR "/themes/";
  CHECK(run_cli("music-similarity " + themes + "fifth_main.thm " + themes +
                "fifth_main.thm --span 2")
            .exit_code != 0);
}

TEST_CASE("ingest maps the three label tokens") {
  const fs::path ds = scratch_dir() / "three_labels.csv";
  write_file(ds, "f1,label\n1.0,+\n-1.0,-\n0.5,?\n");
  const RunResult run = run_cli("centroid " + ds.string());
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("instances: 1+ / 1- / 1?") != std::string::npos);
}

TEST_CASE("encode echoes labels and is consistent with the library") {
  const RunResult run = run_cli("encode " + dataset_path().string() + " --format csv");
  REQUIRE(run.exit_code == 0);
  const auto rows = parse_csv(run.output);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] ==
        std::vector<std::string>{"id", "psi_1", "psi_2", "psi_3", "label"});
  const PureState expected = amplitude_encode(FeatureVector({1.0, 2.0}));
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(std::stod(rows[1][k + 1]) - expected[k]) <= 1e-11);
  }
  CHECK(rows[1][4] == "+");
}

TEST_CASE("similarity reports pairwise fidelities") {
  const fs::path qp = scratch_dir() / "pairs.csv";
  write_file(qp, "f1,f2\n1.0,0.0\n1.0,0.0\n-5.0,4.0\n");
  const RunResult run = run_cli("similarity " + qp.string() + " --threshold 0.99 --format csv");
  REQUIRE(run.exit_code == 0);
  const auto rows = parse_csv(run.output);
  REQUIRE(rows.size() == 4);  // header + 3 pairs
  CHECK(rows[1][0] == "0");
  CHECK(rows[1][1] == "1");
  CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0));
  CHECK(rows[1][3] == "true");
  CHECK(rows[3][3] == "false");
}

TEST_CASE("music-similarity on the shipped fixtures") {
  const std::string themes = QGESTALT_DATA_DIR "/themes/";
  const RunResult run = run_cli("music-similarity " + themes + "op10n1_primary.thm " +
                                themes + "op10n1_major.thm --threshold 0.9 --format csv");
  REQUIRE(run.exit_code == 0);
  const auto rows = parse_csv(run.output);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][0]) == doctest::Approx(3844.0 / 4020.0).epsilon(1e-9));
  CHECK(std::stod(rows[1][1]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[1][2] == "true");
  CHECK(rows[1][3] == "true");
  CHECK(rows[1][4] == "true");
  CHECK(rows[1][5] == "true");
}

TEST_CASE("music-classify agrees with the library on the shipped manifest") {
  const std::string themes = QGESTALT_DATA_DIR "/themes/";
  const RunResult run =
      run_cli("music-classify " + themes + "fifth_manifest.txt " + themes +
              "fifth_main.thm " + themes + "fifth_horn_variant.thm "
              "--mode strong --threshold 0.9 --format csv");
  REQUIRE(run.exit_code == 0);
  const auto rows = parse_csv(run.output);
  REQUIRE(rows.size() == 3);

  // Library-side replay of the same run.
  using namespace qgestalt::music;
  const auto load = [&](const std::string& name) {
    std::ifstream in(themes + name, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_theme(text.str(), name);
  };
  std::vector<AbstractTheme> corpus = {load("fifth_main.thm"),
                                       load("fifth_major_virtual.thm"),
                                       load("uniform_quarters.thm"),
                                       load("op10n1_primary.thm")};
  std::vector<AbstractTheme> queries = {load("fifth_main.thm"),
                                        load("fifth_horn_variant.thm")};
  EncodingConfig config;
  std::vector<AbstractTheme> all = corpus;
  all.insert(all.end(), queries.begin(), queries.end());
  config.span = resolve_span(all, config);
  const MusicalCentroids mc = musical_centroids(MusicalDataSet::from_labeled(
      {{encode_theme(corpus[0], config), ClassLabel::positive},
       {encode_theme(corpus[1], config), ClassLabel::positive},
       {encode_theme(corpus[2], config), ClassLabel::negative},
       {encode_theme(corpus[3], config), ClassLabel::negative}}));
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const ClassLabel expected =
        classify_theme(encode_theme(queries[q], config), mc, SimilarityMode::strong,
                       SimilarityThreshold(0.9));
    CHECK(rows[q + 1].back().size() == 1);
    CHECK(rows[q + 1].back()[0] == to_char(expected));
  }
}

TEST_CASE("selftest exits 0 and honors QGESTALT_SEED") {
  const RunResult run = run_cli("selftest", "QGESTALT_SEED=12345");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("PASS") != std::string::npos);
  CHECK(run.output.find("FAIL") == std::string::npos);
  CHECK(run.output.find("0.5 / 0.5 / 0") != std::string::npos);

  const RunResult bad_seed = run_cli("selftest", "QGESTALT_SEED=banana");
  CHECK(bad_seed.exit_code != 0);

  const RunResult twice = run_cli("selftest --format csv", "QGESTALT_SEED=12345");
  const RunResult again = run_cli("selftest --format csv", "QGESTALT_SEED=12345");
  CHECK(twice.output == again.output);
}

}  // TEST_SUITE
