#include "mubquant/witness.hpp"

#include <cmath>

namespace mubq {

namespace {

// Tiny negative populations from numerical noise are clamped to 0 before
// square roots; anything below -1e-12 is a real error upstream.
double clamped(double p) {
  if (p < -1e-12) {
    throw std::invalid_argument("witness: negative population");
  }
  return std::max(p, 0.0);
}

double normalization(int d) { return std::sqrt(2.0 / (d * (d - 1.0))); }

int infer_dim(const DensityMatrix& rho, int d) {
  if (static_cast<long long>(d) * d != rho.dim()) {
    throw std::invalid_argument("witness: state is not bipartite d x d");
  }
  return d;
}

}  // namespace

CoincidenceMatrix::CoincidenceMatrix(
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> c,
    std::string label)
    : dim(static_cast<int>(c.rows())),
      counts(std::move(c)),
      basis_label(std::move(label)) {
  if (counts.rows() != counts.cols() || counts.rows() < 1) {
    throw std::invalid_argument("CoincidenceMatrix: counts must be square");
  }
  if (counts.minCoeff() < 0) {
    throw std::invalid_argument("CoincidenceMatrix: negative count");
  }
  if (counts.sum() <= 0) {
    throw std::invalid_argument("CoincidenceMatrix: zero total counts");
  }
}

Eigen::MatrixXd basis_populations(const DensityMatrix& rho,
                                  const std::vector<Ket>& basis) {
  const int d = static_cast<int>(basis.size());
  infer_dim(rho, d);
  Eigen::MatrixXd pops(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      pops(m, n) = joint_probability(rho, basis[m], conjugate(basis[n]));
    }
  }
  return pops;
}

double correlation_sum(const DensityMatrix& rho,
                       const std::vector<std::vector<Ket>>& bases) {
  double total = 0.0;
  for (const auto& basis : bases) {
    const int d = static_cast<int>(basis.size());
    infer_dim(rho, d);
    for (int i = 0; i < d; ++i) {
      total += joint_probability(rho, basis[i], conjugate(basis[i]));
    }
  }
  return total;
}

double m1_sum(const Eigen::MatrixXd& populations) {
  const int d = static_cast<int>(populations.rows());
  double sum = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      if (n == m) continue;
      for (int l = 0; l < d; ++l) {
        if (l == m) continue;
        for (int o = 0; o < d; ++o) {
          if (o == l || o == n) continue;
          sum += std::sqrt(clamped(populations(m, n)) *
                           clamped(populations(l, o)));
        }
      }
    }
  }
  return sum;
}

double m2_sum(const Eigen::MatrixXd& populations) {
  const int d = static_cast<int>(populations.rows());
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      sum += std::sqrt(clamped(populations(i, j)) *
                       clamped(populations(j, i)));
    }
  }
  return sum;
}

double witness_b_from_state(const DensityMatrix& rho, const MubPair& mubs) {
  const int d = infer_dim(rho, mubs.dim);
  double c2 = 0.0;
  for (int i = 0; i < d; ++i) {
    c2 += joint_probability(rho, mubs.basis2[i], conjugate(mubs.basis2[i]));
  }
  const Eigen::MatrixXd pops = basis_populations(rho, mubs.basis1);
  return normalization(d) * (d * c2 - 1.0 - m1_sum(pops) - m2_sum(pops));
}

WitnessReport witness_from_probabilities(const Eigen::MatrixXd& p1,
                                         const Eigen::MatrixXd& p2) {
  if (p1.rows() != p1.cols() || p1.rows() != p2.rows() ||
      p2.rows() != p2.cols()) {
    throw std::invalid_argument("witness: probability matrices must be "
                                "square and of equal dimension");
  }
  const int d = static_cast<int>(p1.rows());
  if (d < 2) {
    throw std::invalid_argument("witness: dimension must be at least 2");
  }

  WitnessReport report;
  report.c1 = p1.diagonal().sum();
  report.c2 = p2.diagonal().sum();
  report.m1 = m1_sum(p1);
  report.m2 = m2_sum(p1);
  report.b =
      normalization(d) * (d * report.c2 - 1.0 - report.m1 - report.m2);
  report.detected = report.b > 0.0;
  report.eof_lower_bound_ebits = eof_lower_bound(report.b, d);
  report.schmidt_lower_bound =
      schmidt_lower_bound(report.eof_lower_bound_ebits);
  return report;
}

WitnessReport witness_b_from_counts(const CoincidenceMatrix& corr1,
                                    const CoincidenceMatrix& corr2) {
  if (corr1.dim != corr2.dim) {
    throw std::invalid_argument("witness: coincidence dimensions differ");
  }
  // Each matrix is normalized by its own total.
  const Eigen::MatrixXd p1 =
      corr1.counts.cast<double>() / static_cast<double>(corr1.total());
  const Eigen::MatrixXd p2 =
      corr2.counts.cast<double>() / static_cast<double>(corr2.total());
  WitnessReport report = witness_from_probabilities(p1, p2);
  report.total1 = corr1.total();
  report.total2 = corr2.total();
  return report;
}

double eof_lower_bound(double b, int d) {
  (void)d;  // dimension only bounds the attainable b, the formula is free of it
  if (b <= 0.0) return 0.0;
  const double arg = 1.0 - b * b / 2.0;
  if (arg <= 0.0) {
    throw std::invalid_argument(
        "eof_lower_bound: b >= sqrt(2) is inconsistent with a quantum state");
  }
  return -std::log2(arg);
}

int schmidt_lower_bound(double eof_ebits) {
  if (eof_ebits < 0.0) {
    throw std::invalid_argument("schmidt_lower_bound: negative e-bits");
  }
  const double raw = std::ceil(std::exp2(eof_ebits));
  return std::max(1, static_cast<int>(raw));
}

}  // namespace mubq
