#include "mubquant/noise.hpp"

#include <cmath>

#include "mubquant/witness.hpp"

namespace mubq {

const char* noise_family_name(NoiseFamily family) {
  return family == NoiseFamily::dephasing ? "dephasing" : "white";
}

NoiseFamily noise_family_from_name(const std::string& name) {
  if (name == "dephasing") return NoiseFamily::dephasing;
  if (name == "white") return NoiseFamily::white;
  throw std::invalid_argument("unknown noise family: " + name);
}

namespace {

void check_fraction(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("noise fraction p must lie in [0, 1]");
  }
}

}  // namespace

DensityMatrix dephased_state(int d, double p) {
  check_fraction(p);
  const Ket psi = phi_plus(d);
  Matrix rho = p * psi.amplitudes() * psi.amplitudes().adjoint();
  for (int i = 0; i < d; ++i) {
    rho(i * d + i, i * d + i) += (1.0 - p) / d;
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix isotropic_state(int d, double p) {
  check_fraction(p);
  const Ket psi = phi_plus(d);
  Matrix rho = p * psi.amplitudes() * psi.amplitudes().adjoint() +
               (1.0 - p) / (d * d) * Matrix::Identity(d * d, d * d);
  return DensityMatrix(std::move(rho));
}

DensityMatrix noisy_state(NoiseFamily family, int d, double p) {
  return family == NoiseFamily::dephasing ? dephased_state(d, p)
                                          : isotropic_state(d, p);
}

double critical_noise_direct(NoiseFamily family, int d, const MubPair& mubs) {
  auto b_of = [&](double p) {
    return witness_b_from_state(noisy_state(family, d, p), mubs);
  };
  const double b1 = b_of(1.0);
  if (b1 <= 0.0) return 1.0;
  if (b_of(0.0) >= 0.0) return 0.0;  // detected on all of (0, 1]
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (b_of(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double paper_pcrit(NoiseFamily family, int d) {
  if (d < 2) throw std::invalid_argument("paper_pcrit: d must be >= 2");
  if (family == NoiseFamily::dephasing) {
    return 1.0 / (d + 1.0);
  }
  return (d * d - 3.0 * d + 2.0) / (d * d - 2.0 * d + 2.0);
}

NoiseScan scan_noise(NoiseFamily family, int d, const MubPair& mubs,
                     int grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("scan_noise: need at least 2 grid points");
  }
  NoiseScan scan{};
  scan.family = family;
  scan.d = d;
  scan.samples.reserve(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double p = static_cast<double>(i) / (grid_points - 1);
    scan.samples.emplace_back(
        p, witness_b_from_state(noisy_state(family, d, p), mubs));
  }
  scan.p_crit_direct = critical_noise_direct(family, d, mubs);
  scan.p_crit_paper_formula = paper_pcrit(family, d);
  scan.formula_discrepancy =
      std::abs(scan.p_crit_direct - scan.p_crit_paper_formula) > 1e-6;
  return scan;
}

}  // namespace mubq
