#include "mubquant/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mubq {

std::string format_double(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(9);
  out << value;
  return out.str();
}

Json coincidence_to_json(const CoincidenceMatrix& matrix) {
  Json rows = Json::array();
  for (int i = 0; i < matrix.dim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < matrix.dim; ++j) row.push_back(matrix.counts(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"dimension", matrix.dim},
              {"basis_label", matrix.basis_label},
              {"counts", std::move(rows)}};
}

CoincidenceMatrix coincidence_from_json(const Json& j) {
  if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
    throw std::invalid_argument("coincidence JSON: missing field 'dimension'");
  }
  if (!j.contains("counts") || !j["counts"].is_array()) {
    throw std::invalid_argument("coincidence JSON: missing field 'counts'");
  }
  const int dim = j["dimension"].get<int>();
  const auto& rows = j["counts"];
  if (static_cast<int>(rows.size()) != dim) {
    throw std::invalid_argument(
        "coincidence JSON: 'counts' row count does not match 'dimension'");
  }
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != dim) {
      throw std::invalid_argument(
          "coincidence JSON: 'counts' rows must have 'dimension' entries");
    }
    for (int k = 0; k < dim; ++k) {
      if (!rows[i][k].is_number_integer()) {
        throw std::invalid_argument(
            "coincidence JSON: 'counts' entries must be integers");
      }
      counts(i, k) = rows[i][k].get<long long>();
    }
  }
  return CoincidenceMatrix(std::move(counts),
                           j.value("basis_label", std::string{}));
}

CoincidenceMatrix load_coincidence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  Json j;
  in >> j;
  return coincidence_from_json(j);
}

void save_coincidence(const CoincidenceMatrix& matrix,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path.string());
  }
  out << coincidence_to_json(matrix).dump(2) << '\n';
}

Json witness_report_to_json(const WitnessReport& report) {
  return Json{{"c1", report.c1},
              {"c2", report.c2},
              {"m1", report.m1},
              {"m2", report.m2},
              {"b", report.b},
              {"eof_lower_bound_ebits", report.eof_lower_bound_ebits},
              {"schmidt_lower_bound", report.schmidt_lower_bound},
              {"detected", report.detected},
              {"total1", report.total1},
              {"total2", report.total2}};
}

Json gme_report_to_json(const GmeReport& report) {
  return Json{{"c_nd", report.c_nd},
              {"xi", report.xi},
              {"g", report.g},
              {"bound", report.bound},
              {"detected", report.detected},
              {"certified", report.certified},
              {"boundary_overlap", report.boundary_overlap}};
}

CameraConfig camera_config_from_json(const Json& j) {
  CameraConfig config;
  auto require = [&](const char* field) -> const Json& {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("camera config JSON: missing "
                                              "field '") + field + "'");
    }
    return j[field];
  };
  config.num_regions = require("num_regions").get<int>();
  config.region_size = require("region_size").get<int>();
  config.gap = require("gap").get<int>();
  config.sigma_marginal = require("sigma_marginal").get<double>();
  config.fedorov_ratio = require("fedorov_ratio").get<double>();
  config.dark_rate = require("dark_rate").get<double>();
  config.efficiency = require("efficiency").get<double>();
  config.pair_prob = require("pair_prob").get<double>();
  config.frames = require("frames").get<long long>();
  config.seed = require("seed").get<std::uint64_t>();
  config.validate();
  return config;
}

Json camera_config_to_json(const CameraConfig& config) {
  return Json{{"num_regions", config.num_regions},
              {"region_size", config.region_size},
              {"gap", config.gap},
              {"sigma_marginal", config.sigma_marginal},
              {"fedorov_ratio", config.fedorov_ratio},
              {"dark_rate", config.dark_rate},
              {"efficiency", config.efficiency},
              {"pair_prob", config.pair_prob},
              {"frames", config.frames},
              {"seed", config.seed}};
}

CameraConfig load_camera_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  Json j;
  in >> j;
  return camera_config_from_json(j);
}

std::string noise_scan_to_csv(const NoiseScan& scan) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "p,b,detected\n";
  for (const auto& [p, b] : scan.samples) {
    out << format_double(p) << ',' << format_double(b) << ','
        << (b > 0.0 ? 1 : 0) << '\n';
  }
  out << "p_crit_direct," << format_double(scan.p_crit_direct) << ",\n";
  out << "p_crit_paper_formula," << format_double(scan.p_crit_paper_formula)
      << ",\n";
  return out.str();
}

Json noise_scan_to_json(const NoiseScan& scan) {
  Json samples = Json::array();
  for (const auto& [p, b] : scan.samples) {
    samples.push_back(Json{{"p", p}, {"b", b}, {"detected", b > 0.0}});
  }
  return Json{{"family", noise_family_name(scan.family)},
              {"d", scan.d},
              {"samples", std::move(samples)},
              {"p_crit_direct", scan.p_crit_direct},
              {"p_crit_paper_formula", scan.p_crit_paper_formula},
              {"formula_discrepancy", scan.formula_discrepancy}};
}

}  // namespace mubq
