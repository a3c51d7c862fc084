#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mubquant/io.hpp"

namespace fs = std::filesystem;
using mubq::Json;

namespace {

const std::string kCli = MUBQUANT_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mubquant_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args, const fs::path& stdout_file = {}) {
  std::string command = kCli + " " + args;
  if (!stdout_file.empty()) command += " > " + stdout_file.string();
  command += " 2> /dev/null";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

void write_example_inputs(const fs::path& dir) {
  write_file(dir / "corr1.json",
             R"({"dimension": 3, "basis_label": "position",
                 "counts": [[1015,23,9],[17,947,8],[9,28,1008]]})");
  write_file(dir / "corr2.json",
             R"({"dimension": 3, "basis_label": "momentum",
                 "counts": [[1053,21,7],[29,1017,25],[5,15,1023]]})");
}

}  // namespace

TEST_CASE("demo reproduces the worked example and exits 0") {
  TempDir tmp;
  const fs::path out = tmp.path / "demo.txt";
  CHECK(run("demo", out) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("B = 1.0338") != std::string::npos);
  CHECK(text.find("Schmidt number >= 3") != std::string::npos);
}

TEST_CASE("analyze emits the reference witness report") {
  TempDir tmp;
  write_example_inputs(tmp.path);
  const fs::path report_path = tmp.path / "report.json";
  CHECK(run("analyze " + (tmp.path / "corr1.json").string() + " " +
            (tmp.path / "corr2.json").string() + " -o " +
            report_path.string()) == 0);

  std::ifstream in(report_path);
  Json report;
  in >> report;
  CHECK(std::abs(report["b"].get<double>() - 1.0338) < 1e-3);
  CHECK(std::abs(report["eof_lower_bound_ebits"].get<double>() - 1.103) <
        5e-3);
  CHECK(report["schmidt_lower_bound"].get<int>() == 3);
  CHECK(report["detected"].get<bool>());
}

TEST_CASE("analyze csv format") {
  TempDir tmp;
  write_example_inputs(tmp.path);
  const fs::path out = tmp.path / "report.csv";
  CHECK(run("analyze " + (tmp.path / "corr1.json").string() + " " +
            (tmp.path / "corr2.json").string() + " --format csv -o " +
            out.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("field,value") != std::string::npos);
  CHECK(text.find("b,1.03") != std::string::npos);
}

TEST_CASE("analyze failure modes") {
  TempDir tmp;
  write_example_inputs(tmp.path);
  write_file(tmp.path / "two.json",
             R"({"dimension": 2, "basis_label": "x",
                 "counts": [[10,1],[1,10]]})");
  CHECK(run("analyze " + (tmp.path / "corr1.json").string() + " " +
            (tmp.path / "two.json").string()) == 1);

  write_file(tmp.path / "bad.json", R"({"dimension": 3})");
  CHECK(run("analyze " + (tmp.path / "bad.json").string() + " " +
            (tmp.path / "corr2.json").string()) == 1);

  // Uniform matrices: non-detection is a valid outcome, not an error.
  write_file(tmp.path / "uniform.json",
             R"({"dimension": 3, "basis_label": "u",
                 "counts": [[1,1,1],[1,1,1],[1,1,1]]})");
  const fs::path report_path = tmp.path / "flat.json";
  CHECK(run("analyze " + (tmp.path / "uniform.json").string() + " " +
            (tmp.path / "uniform.json").string() + " -o " +
            report_path.string()) == 0);
  std::ifstream in(report_path);
  Json report;
  in >> report;
  CHECK_FALSE(report["detected"].get<bool>());
}

TEST_CASE("simulate writes deterministic coincidence files") {
  TempDir tmp;
  const Json config{{"num_regions", 3},     {"region_size", 3},
                    {"gap", 50},            {"sigma_marginal", 1e7},
                    {"fedorov_ratio", 1e6}, {"dark_rate", 0.0},
                    {"efficiency", 1.0},    {"pair_prob", 1e-9},
                    {"frames", 20000},      {"seed", 9}};
  write_file(tmp.path / "config.json", config.dump());

  CHECK(run("simulate " + (tmp.path / "config.json").string() + " " +
            (tmp.path / "run1").string()) == 0);
  CHECK(run("simulate " + (tmp.path / "config.json").string() + " " +
            (tmp.path / "run2").string()) == 0);

  for (const char* name : {"position.json", "momentum.json", "state.json"}) {
    CHECK(read_file(tmp.path / "run1" / name) ==
          read_file(tmp.path / "run2" / name));
  }

  // Ideal configuration: position counts are strictly diagonal.
  const mubq::CoincidenceMatrix position =
      mubq::load_coincidence(tmp.path / "run1" / "position.json");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) CHECK(position.counts(i, j) == 0);
    }
  }

  // A different seed changes the sampled files.
  CHECK(run("simulate " + (tmp.path / "config.json").string() + " " +
            (tmp.path / "run3").string() + " --seed 10") == 0);
  CHECK(read_file(tmp.path / "run1" / "momentum.json") !=
        read_file(tmp.path / "run3" / "momentum.json"));

  write_file(tmp.path / "bad_config.json", R"({"num_regions": 1})");
  CHECK(run("simulate " + (tmp.path / "bad_config.json").string() + " " +
            (tmp.path / "run4").string()) == 1);
}

TEST_CASE("scan emits CSV with both threshold footers") {
  TempDir tmp;
  const fs::path out = tmp.path / "scan.csv";
  CHECK(run("scan white 3 -o " + out.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("p,b,detected") != std::string::npos);
  CHECK(text.find("p_crit_direct") != std::string::npos);
  CHECK(text.find("p_crit_paper_formula") != std::string::npos);

  CHECK(run("scan nonsense 3 -o " + (tmp.path / "x.csv").string()) == 1);
}

TEST_CASE("gme subcommand handles GHZ mixes and state files") {
  TempDir tmp;
  const fs::path out = tmp.path / "gme.json";
  CHECK(run("gme ghz 3 2 --noise 0.6 -o " + out.string()) == 0);
  {
    std::ifstream in(out);
    Json report;
    in >> report;
    CHECK_FALSE(report["detected"].get<bool>());  // boundary: not detected
  }
  CHECK(run("gme ghz 3 2 --noise 0.7 -o " + out.string()) == 0);
  {
    std::ifstream in(out);
    Json report;
    in >> report;
    CHECK(report["detected"].get<bool>());
  }

  // Pure GHZ(3,2) supplied explicitly as a state file.
  Json rho = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 8; ++j) {
      const bool corner = (i == 0 || i == 7) && (j == 0 || j == 7);
      row.push_back(corner ? 0.5 : 0.0);
    }
    rho.push_back(std::move(row));
  }
  write_file(tmp.path / "state.json",
             Json{{"n", 3}, {"d", 2}, {"rho", rho}}.dump());
  CHECK(run("gme --state-file " + (tmp.path / "state.json").string() +
            " -o " + out.string()) == 0);
  std::ifstream in(out);
  Json report;
  in >> report;
  CHECK(std::abs(report["bound"].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("coincidence JSON round trip is lossless") {
  TempDir tmp;
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts(2, 2);
  counts << 123456789012LL, 1, 0, 42;
  const mubq::CoincidenceMatrix original(counts, "custom label");
  const fs::path path = tmp.path / "roundtrip.json";
  mubq::save_coincidence(original, path);
  const mubq::CoincidenceMatrix loaded = mubq::load_coincidence(path);
  CHECK(loaded.dim == original.dim);
  CHECK(loaded.basis_label == original.basis_label);
  CHECK((loaded.counts.array() == original.counts.array()).all());
}
