#pragma once

#include "mubquant/qcore.hpp"

namespace mubq {

/// Sign of the multi-index class with digit sum s (mod d). Overlapping
/// boundary cases for d divisible by 4 resolve in favor of the first case.
int f_sign(int s, int d);

/// f for a full multi-index (n digits in [0, d-1]).
int f_alpha(const std::vector<int>& alpha, int d);

/// True when the case ranges of f overlap (d divisible by 4); the overlap is
/// resolved by first-matching-case order and flagged in reports.
bool f_boundary_overlap(int d);

struct Combinatorics {
  std::vector<long long> p_l;  // #{alpha : s_alpha = l}
  double xi;
  double g;
};

/// p_l by dynamic programming, plus xi and g. Guards d^n against overflow.
Combinatorics combinatorics(int n, int d);

/// Signed sum of Fourier-basis diagonal elements,
/// sum_alpha f_alpha <k_alpha|rho|k_alpha>.
double c_nd(const DensityMatrix& rho, int n, int d);

struct GmeReport {
  double c_nd = 0.0;
  double xi = 0.0;
  double g = 0.0;
  double bound = 0.0;
  bool detected = false;
  /// False when only the raw ingredients are provided (no certified bound
  /// exists for this (n, d)).
  bool certified = false;
  bool boundary_overlap = false;
};

/// GME-concurrence lower bound for three qubits:
/// C_{3,2} - 4 ( sqrt(p001 p110) + sqrt(p010 p101) + sqrt(p011 p100) ).
GmeReport gme_bound_3qubit(const DensityMatrix& rho);

/// GME-concurrence lower bound for three qutrits, built from the Fourier
/// correlation sum and 32 cross-population square roots.
GmeReport gme_bound_3qutrit(const DensityMatrix& rho);

/// Raw ingredients for (n, d) without a certified bound.
GmeReport gme_ingredients(const DensityMatrix& rho, int n, int d);

/// Minimum over all bipartitions of sqrt(2 (1 - Tr rho_A^2)) for a pure
/// n-partite state. Exponential in n; test oracle, not a production path.
double pure_gme_concurrence(const Ket& psi, int n, int d);

}  // namespace mubq
