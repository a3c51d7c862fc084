#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mubquant/camsim.hpp"
#include "mubquant/gme.hpp"
#include "mubquant/noise.hpp"
#include "mubquant/oracle.hpp"
#include "mubquant/qcore.hpp"
#include "mubquant/witness.hpp"

namespace py = pybind11;
using namespace mubq;

namespace {

py::dict report_to_dict(const WitnessReport& r) {
  py::dict d;
  d["c1"] = r.c1;
  d["c2"] = r.c2;
  d["m1"] = r.m1;
  d["m2"] = r.m2;
  d["b"] = r.b;
  d["eof_lower_bound_ebits"] = r.eof_lower_bound_ebits;
  d["schmidt_lower_bound"] = r.schmidt_lower_bound;
  d["detected"] = r.detected;
  d["total1"] = r.total1;
  d["total2"] = r.total2;
  return d;
}

py::dict gme_to_dict(const GmeReport& r) {
  py::dict d;
  d["c_nd"] = r.c_nd;
  d["xi"] = r.xi;
  d["g"] = r.g;
  d["bound"] = r.bound;
  d["detected"] = r.detected;
  d["certified"] = r.certified;
  d["boundary_overlap"] = r.boundary_overlap;
  return d;
}

MubPair resolve_mubs(int d, std::optional<std::uint64_t> seed) {
  return seed ? random_mub_pair(d, *seed) : fourier_mub(d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement quantification from correlations in two mutually "
            "unbiased bases";

  m.def(
      "analyze_counts",
      [](const Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>& c1,
         const Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>& c2) {
        return report_to_dict(witness_b_from_counts(
            CoincidenceMatrix(c1, "basis1"), CoincidenceMatrix(c2, "basis2")));
      },
      py::arg("corr1"), py::arg("corr2"),
      "Witness report from two coincidence count matrices.");

  m.def(
      "analyze_probabilities",
      [](const Eigen::MatrixXd& p1, const Eigen::MatrixXd& p2) {
        return report_to_dict(witness_from_probabilities(p1, p2));
      },
      py::arg("p1"), py::arg("p2"),
      "Witness report from normalized joint-probability matrices.");

  m.def(
      "witness_b",
      [](const Matrix& rho, int d, std::optional<std::uint64_t> mub_seed) {
        return witness_b_from_state(DensityMatrix(rho),
                                    resolve_mubs(d, mub_seed));
      },
      py::arg("rho"), py::arg("d"), py::arg("mub_seed") = py::none(),
      "B(rho) for a d x d bipartite density matrix; Fourier MUB pair by "
      "default, Haar-random pair when mub_seed is given.");

  m.def("eof_lower_bound", &eof_lower_bound, py::arg("b"), py::arg("d"),
        "-log2(1 - b^2/2) in e-bits, 0 for non-positive b.");
  m.def("schmidt_lower_bound", &schmidt_lower_bound, py::arg("eof_ebits"),
        "ceil(2^eof), at least 1.");

  m.def(
      "phi_plus",
      [](int d) { return Vector(phi_plus(d).amplitudes()); }, py::arg("d"),
      "Amplitudes of the maximally entangled state (1/sqrt(d)) sum |ii>.");
  m.def(
      "ghz", [](int n, int d) { return Vector(ghz(n, d).amplitudes()); },
      py::arg("n"), py::arg("d"));

  m.def(
      "scan_noise",
      [](const std::string& family, int d) {
        const NoiseScan scan =
            mubq::scan_noise(noise_family_from_name(family), d, fourier_mub(d));
        py::dict out;
        out["family"] = noise_family_name(scan.family);
        out["d"] = scan.d;
        out["samples"] = scan.samples;
        out["p_crit_direct"] = scan.p_crit_direct;
        out["p_crit_paper_formula"] = scan.p_crit_paper_formula;
        out["formula_discrepancy"] = scan.formula_discrepancy;
        return out;
      },
      py::arg("family"), py::arg("d"),
      "Noise threshold scan ('dephasing' or 'white').");

  m.def(
      "gme_bound",
      [](const Matrix& rho, int n, int d) {
        const DensityMatrix state{Matrix(rho)};
        if (n == 3 && d == 2) return gme_to_dict(gme_bound_3qubit(state));
        if (n == 3 && d == 3) return gme_to_dict(gme_bound_3qutrit(state));
        return gme_to_dict(gme_ingredients(state, n, d));
      },
      py::arg("rho"), py::arg("n"), py::arg("d"),
      "GME-concurrence lower bound (certified for (3,2) and (3,3)).");

  py::class_<CameraConfig>(m, "CameraConfig")
      .def(py::init<>())
      .def_readwrite("num_regions", &CameraConfig::num_regions)
      .def_readwrite("region_size", &CameraConfig::region_size)
      .def_readwrite("gap", &CameraConfig::gap)
      .def_readwrite("sigma_marginal", &CameraConfig::sigma_marginal)
      .def_readwrite("fedorov_ratio", &CameraConfig::fedorov_ratio)
      .def_readwrite("dark_rate", &CameraConfig::dark_rate)
      .def_readwrite("efficiency", &CameraConfig::efficiency)
      .def_readwrite("pair_prob", &CameraConfig::pair_prob)
      .def_readwrite("frames", &CameraConfig::frames)
      .def_readwrite("seed", &CameraConfig::seed);

  m.def("paper_7x7_config", &paper_7x7_config);
  m.def("paper_3x3_config", &paper_3x3_config);
  m.def("ideal_config", &ideal_config, py::arg("d"));

  m.def(
      "ebit_estimate",
      [](const CameraConfig& config) {
        const EbitReport report = mubq::ebit_estimate(config);
        py::dict out = report_to_dict(report.witness);
        out["white_noise_p"] = report.state.white_noise_p;
        out["weights"] = Eigen::VectorXd(report.state.weights);
        return out;
      },
      py::arg("config"),
      "Witness report for the exact expected camera statistics.");

  m.def(
      "simulate_counts",
      [](const CameraConfig& config, const std::string& basis,
         std::optional<long long> frames, std::optional<std::uint64_t> seed) {
        const EffectiveState state = build_state(config);
        const MeasurementBasis b = basis == "momentum"
                                       ? MeasurementBasis::momentum
                                       : MeasurementBasis::position;
        return Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>(
            mubq::simulate_counts(state, b, frames.value_or(config.frames),
                                  seed.value_or(config.seed))
                .counts);
      },
      py::arg("config"), py::arg("basis") = "position",
      py::arg("frames") = py::none(), py::arg("seed") = py::none(),
      "Sampled coincidence matrix for one basis; deterministic per seed.");
}
