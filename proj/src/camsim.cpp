#include "mubquant/camsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mubq {

namespace {

// Mass of a centered Gaussian of width sigma on [a, b].
double gaussian_mass(double a, double b, double sigma) {
  const double s = sigma * std::numbers::sqrt2;
  return 0.5 * (std::erf(b / s) - std::erf(a / s));
}

}  // namespace

void CameraConfig::validate() const {
  if (num_regions < 2) {
    throw std::invalid_argument("CameraConfig: num_regions must be >= 2");
  }
  if (region_size < 1 || gap < 0) {
    throw std::invalid_argument("CameraConfig: invalid region geometry");
  }
  if (sigma_marginal <= 0.0 || fedorov_ratio < 1.0) {
    throw std::invalid_argument("CameraConfig: invalid beam parameters");
  }
  if (dark_rate < 0.0) {
    throw std::invalid_argument("CameraConfig: negative dark rate");
  }
  if (efficiency < 0.0 || efficiency > 1.0) {
    throw std::invalid_argument("CameraConfig: efficiency out of [0, 1]");
  }
  if (pair_prob < 0.0 || pair_prob >= 1.0) {
    throw std::invalid_argument("CameraConfig: pair_prob out of [0, 1)");
  }
  if (frames < 1) {
    throw std::invalid_argument("CameraConfig: frames must be positive");
  }
}

Eigen::VectorXd gaussian_weights(const CameraConfig& config) {
  const int d = config.num_regions;
  if (d < 1) throw std::invalid_argument("gaussian_weights: no regions");
  const double pitch = config.region_size + config.gap;
  Eigen::VectorXd w(d);
  for (int x = 0; x < d; ++x) {
    const double center = (x - 0.5 * (d - 1)) * pitch;
    w(x) = gaussian_mass(center - 0.5 * config.region_size,
                         center + 0.5 * config.region_size,
                         config.sigma_marginal);
  }
  return w / w.norm();
}

std::pair<double, double> cross_coeffs(const CameraConfig& config) {
  // Conditional width sigma / F: the Fedorov ratio is the ratio of the
  // marginal to the conditional distribution width.
  const double sigma_c = config.sigma_marginal / config.fedorov_ratio;
  const double half = 0.5 * config.region_size;
  const double own = gaussian_mass(-half, half, sigma_c);
  const double neighbor_lo = half + config.gap;
  const double neighbor = gaussian_mass(
      neighbor_lo, neighbor_lo + config.region_size, sigma_c);
  return {own, neighbor};
}

double whitenoise_probability(double d1, double d2, double eps1, double eps2,
                              double pair_prob) {
  if (d1 < 0.0 || d1 >= 1.0 || d2 < 0.0 || d2 >= 1.0) {
    throw std::invalid_argument("whitenoise_probability: D out of [0, 1)");
  }
  if (eps1 < 0.0 || eps1 > 1.0 || eps2 < 0.0 || eps2 > 1.0) {
    throw std::invalid_argument("whitenoise_probability: eps out of [0, 1]");
  }
  if (pair_prob < 0.0) {
    throw std::invalid_argument("whitenoise_probability: negative P");
  }
  const double e1b = 1.0 - eps1;
  const double e2b = 1.0 - eps2;
  const double d1b = 1.0 - d1;
  const double d2b = 1.0 - d2;
  const double y = pair_prob * e1b * e2b;
  if (y >= 1.0) {
    throw std::invalid_argument("whitenoise_probability: series diverges");
  }
  const double good = pair_prob * eps1 * eps2 * d1b * d2b;
  // Closed forms of sum y^n, sum n y^{n-1} and sum n^2 y^{n-1}.
  const double all =
      d1 * d2 / (1.0 - y) +
      d1 * eps2 * d2b * pair_prob * e1b / ((1.0 - y) * (1.0 - y)) +
      eps1 * d2 * d1b * pair_prob * e2b / ((1.0 - y) * (1.0 - y)) +
      eps1 * eps2 * d1b * d2b * pair_prob * (1.0 + y) /
          ((1.0 - y) * (1.0 - y) * (1.0 - y));
  if (all <= 0.0) return 0.0;
  return 1.0 - good / all;
}

EffectiveState build_state(const CameraConfig& config) {
  config.validate();
  const int d = config.num_regions;
  const Eigen::VectorXd w = gaussian_weights(config);
  const auto [c_own, c_neighbor] = cross_coeffs(config);

  Vector psi = Vector::Zero(d * d);
  for (int x = 0; x < d; ++x) {
    Vector bar = Vector::Zero(d * d);
    bar(x * d + x) = c_own;
    for (int y : {x - 1, x + 1}) {
      if (y < 0 || y >= d) continue;
      bar(x * d + y) += c_neighbor;
      bar(y * d + x) += c_neighbor;
    }
    psi += w(x) * bar / bar.norm();
  }
  psi /= psi.norm();

  // Dark-count probability per photon side: Poisson over the d regions.
  const double d_side = 1.0 - std::exp(-d * config.dark_rate);
  const double white = whitenoise_probability(
      d_side, d_side, config.efficiency, config.efficiency,
      config.pair_prob);

  const double p = 1.0 - white;
  Matrix rho = p * psi * psi.adjoint() +
               (1.0 - p) / (d * d) * Matrix::Identity(d * d, d * d);

  EffectiveState state{Eigen::VectorXd(w), c_own, c_neighbor, white,
                       DensityMatrix(std::move(rho))};
  return state;
}

Eigen::MatrixXd expected_probabilities(const EffectiveState& state,
                                       MeasurementBasis basis) {
  const int d = static_cast<int>(state.weights.size());
  Eigen::MatrixXd probs(d, d);
  if (basis == MeasurementBasis::position) {
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        probs(x, y) =
            std::max(state.rho.element(x * d + y, x * d + y).real(), 0.0);
      }
    }
  } else {
    probs = basis_populations(state.rho, fourier_mub(d).basis2);
  }
  return probs / probs.sum();
}

CoincidenceMatrix simulate_counts(const EffectiveState& state,
                                  MeasurementBasis basis, long long frames,
                                  std::uint64_t seed) {
  if (frames < 1) {
    throw std::invalid_argument("simulate_counts: frames must be positive");
  }
  const Eigen::MatrixXd probs = expected_probabilities(state, basis);
  const int d = static_cast<int>(probs.rows());

  // Inverse-CDF sampling with an explicit generator so that output is
  // reproducible bit for bit across runs.
  std::vector<double> cdf(d * d);
  double acc = 0.0;
  for (int i = 0; i < d * d; ++i) {
    acc += probs(i / d, i % d);
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts =
      Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  for (long long f = 0; f < frames; ++f) {
    const double u = uniform(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const int cell = static_cast<int>(it - cdf.begin());
    counts(cell / d, cell % d) += 1;
  }
  return CoincidenceMatrix(
      std::move(counts),
      basis == MeasurementBasis::position ? "position" : "momentum");
}

EbitReport ebit_estimate(const CameraConfig& config) {
  EffectiveState state = build_state(config);
  const Eigen::MatrixXd p1 =
      expected_probabilities(state, MeasurementBasis::position);
  const Eigen::MatrixXd p2 =
      expected_probabilities(state, MeasurementBasis::momentum);
  return EbitReport{witness_from_probabilities(p1, p2), std::move(state)};
}

CameraConfig paper_7x7_config() {
  CameraConfig config;
  config.num_regions = 10;
  config.region_size = 7;
  config.gap = 14;
  config.sigma_marginal = 140.0;
  config.fedorov_ratio = 25.0;
  config.dark_rate = 2.4e-5;
  config.efficiency = 0.2;
  config.pair_prob = 1e-3;
  config.frames = 100000;
  config.seed = 20210915;
  return config;
}

CameraConfig paper_3x3_config() {
  CameraConfig config = paper_7x7_config();
  config.region_size = 3;
  config.gap = 10;
  config.sigma_marginal = 100.0;
  // Dark counts scale with the region area: (3/7)^2 of the 7x7 rate. The
  // lower accidental floor moves the optimal pair rate down as well.
  config.dark_rate = 2.4e-5 * 9.0 / 49.0;
  config.pair_prob = 1.5e-4;
  return config;
}

CameraConfig ideal_config(int d) {
  CameraConfig config;
  config.num_regions = d;
  config.region_size = 3;
  config.gap = 50;
  config.sigma_marginal = 1e7;
  config.fedorov_ratio = 1e6;
  config.dark_rate = 0.0;
  config.efficiency = 1.0;
  config.pair_prob = 1e-9;
  config.frames = 100000;
  config.seed = 1;
  return config;
}

}  // namespace mubq
