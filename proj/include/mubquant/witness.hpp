#pragma once

#include <string>

#include "mubquant/qcore.hpp"

namespace mubq {

/// Raw joint-detection counts from one basis pair. Rows index the outcome of
/// party A, columns the outcome of party B.
struct CoincidenceMatrix {
  int dim;
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> counts;
  std::string basis_label;

  CoincidenceMatrix(Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> c,
                    std::string label);

  long long total() const { return counts.sum(); }
};

struct WitnessReport {
  double c1 = 0.0;
  double c2 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double b = 0.0;
  double eof_lower_bound_ebits = 0.0;
  int schmidt_lower_bound = 1;
  bool detected = false;
  long long total1 = 0;
  long long total2 = 0;
};

/// Joint populations <v_m (v_n)*|rho|v_m (v_n)*> for every pair of basis
/// vectors; the conjugation on party B makes maximally entangled states
/// perfectly correlated in every basis.
Eigen::MatrixXd basis_populations(const DensityMatrix& rho,
                                  const std::vector<Ket>& basis);

/// Sum of diagonal correlations over the given bases; in [0, m] for m bases.
double correlation_sum(const DensityMatrix& rho,
                       const std::vector<std::vector<Ket>>& bases);

/// Cross-population sum over ordered tuples (m,n,l,o) with m!=n, m!=l,
/// l!=o, n!=o; d(d-1)(d^2-3d+3) terms.
double m1_sum(const Eigen::MatrixXd& populations);

/// sum_{i!=j} sqrt(p(i,j) p(j,i)).
double m2_sum(const Eigen::MatrixXd& populations);

double witness_b_from_state(const DensityMatrix& rho, const MubPair& mubs);

/// Witness evaluated from normalized joint-probability matrices (basis-1 and
/// basis-2 data). Both matrices must sum to 1.
WitnessReport witness_from_probabilities(const Eigen::MatrixXd& p1,
                                         const Eigen::MatrixXd& p2);

WitnessReport witness_b_from_counts(const CoincidenceMatrix& corr1,
                                    const CoincidenceMatrix& corr2);

/// -log2(1 - b^2/2) for b > 0, else 0. Rejects b with b^2/2 >= 1.
double eof_lower_bound(double b, int d);

/// ceil(2^eof), at least 1.
int schmidt_lower_bound(double eof_ebits);

}  // namespace mubq
