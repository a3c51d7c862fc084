#pragma once

#include "mubquant/qcore.hpp"

namespace mubq {

enum class NoiseFamily { dephasing, white };

const char* noise_family_name(NoiseFamily family);
NoiseFamily noise_family_from_name(const std::string& name);

/// p |phi+><phi+| + (1-p)/d sum_i |ii><ii|
DensityMatrix dephased_state(int d, double p);

/// p |phi+><phi+| + (1-p)/d^2 I
DensityMatrix isotropic_state(int d, double p);

DensityMatrix noisy_state(NoiseFamily family, int d, double p);

/// Root of p -> B(family(d, p)) found by bisection to 1e-9. Returns 0 if the
/// witness is positive on all of (0, 1], 1 if it is nowhere positive.
double critical_noise_direct(NoiseFamily family, int d, const MubPair& mubs);

/// The closed-form thresholds printed in the source analysis, verbatim:
/// 1/(d+1) for dephasing, (d^2-3d+2)/(d^2-2d+2) for white noise. These
/// disagree with direct evaluation of the witness (see NoiseScan).
double paper_pcrit(NoiseFamily family, int d);

struct NoiseScan {
  NoiseFamily family;
  int d;
  std::vector<std::pair<double, double>> samples;  // (p, b)
  double p_crit_direct;
  double p_crit_paper_formula;
  /// True when the direct root and the closed form disagree beyond 1e-6.
  /// The discrepancy is documented behavior, not an error: the closed forms
  /// are reproduced verbatim while the witness is evaluated directly.
  bool formula_discrepancy;
};

NoiseScan scan_noise(NoiseFamily family, int d, const MubPair& mubs,
                     int grid_points = 21);

}  // namespace mubq
