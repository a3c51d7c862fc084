#pragma once

#include "mubquant/qcore.hpp"
#include "mubquant/witness.hpp"

namespace mubq {

/// Geometry and detector parameters of the two-photon camera experiment.
/// Regions are 1-D along the correlated axis: num_regions blocks of
/// region_size pixels separated by gap unobserved pixels, centered on the
/// beam.
struct CameraConfig {
  int num_regions = 3;      // d
  int region_size = 7;      // pixels per region along the correlated axis
  int gap = 14;             // unobserved pixels between adjacent regions
  double sigma_marginal = 100.0;  // beam width in pixels
  double fedorov_ratio = 25.0;    // marginal-to-conditional width ratio
  double dark_rate = 0.0;   // expected dark counts per region per frame
  double efficiency = 0.2;  // single-photon detection efficiency
  double pair_prob = 1e-3;  // per-frame pair weight
  long long frames = 100000;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class MeasurementBasis { position, momentum };

/// The noisy two-photon state the configured camera effectively measures.
struct EffectiveState {
  Eigen::VectorXd weights;  // w_x, normalized Gaussian region weights
  double c_own = 1.0;       // conditional mass on the correlated region
  double c_neighbor = 0.0;  // conditional mass on a first neighbor
  double white_noise_p = 0.0;
  DensityMatrix rho;
};

/// Region weights from the marginal Gaussian, normalized to unit Euclidean
/// norm. Uniform in the wide-beam limit.
Eigen::VectorXd gaussian_weights(const CameraConfig& config);

/// (c_x, c_{x,y}) from the conditional Gaussian of width sigma / F
/// integrated over the own region and one first-neighbor region. Neighbors
/// beyond first order are truncated to zero.
std::pair<double, double> cross_coeffs(const CameraConfig& config);

/// 1 - good/all from the two-photon counting series, in closed form.
/// D1, D2 are per-frame dark-count probabilities on each photon's side,
/// eps the detection efficiencies, P the per-frame pair weight.
double whitenoise_probability(double d1, double d2, double eps1, double eps2,
                              double pair_prob);

EffectiveState build_state(const CameraConfig& config);

/// Exact joint outcome probabilities of the state in one basis. Position is
/// the region (computational) basis; momentum is the Fourier pair of the
/// region labels.
Eigen::MatrixXd expected_probabilities(const EffectiveState& state,
                                       MeasurementBasis basis);

/// Multinomial sample of `frames` accepted two-photon events.
CoincidenceMatrix simulate_counts(const EffectiveState& state,
                                  MeasurementBasis basis, long long frames,
                                  std::uint64_t seed);

struct EbitReport {
  WitnessReport witness;
  EffectiveState state;
};

/// Full pipeline on exact expected statistics: build the state, form both
/// coincidence distributions, run the witness.
EbitReport ebit_estimate(const CameraConfig& config);

/// 10 regions of 7x7 pixels with large gaps, F = 25, 20% efficiency.
CameraConfig paper_7x7_config();

/// 10 regions of 3x3 pixels; smaller regions collect fewer dark counts.
CameraConfig paper_3x3_config();

/// Noise-free, perfectly correlated, flat-beam limit.
CameraConfig ideal_config(int d);

}  // namespace mubq
