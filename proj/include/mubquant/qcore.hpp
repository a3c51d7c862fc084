#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace mubq {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerances used by the type invariants.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnbiasedTol = 1e-10;

/// Normalized pure state of a finite-dimensional system.
class Ket {
public:
  explicit Ket(Vector amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_(i); }

private:
  Vector amps_;
};

/// Hermitian, unit-trace, positive-semidefinite operator.
/// Matrices violating the invariants are rejected, not projected.
class DensityMatrix {
public:
  explicit DensityMatrix(Matrix entries);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& entries() const { return mat_; }
  Complex element(int i, int j) const { return mat_(i, j); }

private:
  Matrix mat_;
};

/// Two orthonormal bases of the same dimension, promised mutually unbiased.
struct MubPair {
  int dim;
  std::vector<Ket> basis1;
  std::vector<Ket> basis2;

  MubPair(std::vector<Ket> b1, std::vector<Ket> b2);
};

/// d x d discrete Fourier matrix with entries omega^{km} / sqrt(d).
Matrix fourier_matrix(int d);

/// Computational basis paired with the normalized Fourier basis.
MubPair fourier_mub(int d);

/// Haar-random unitary, QR of a complex Gaussian matrix with the
/// diagonal phases fixed. Deterministic for a fixed generator state.
Matrix haar_unitary(int d, std::mt19937_64& rng);

/// basis1 = columns of a Haar-random U, basis2 = columns of U * F.
MubPair random_mub_pair(int d, std::uint64_t seed);

Ket tensor(const Ket& a, const Ket& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix pure_density(const Ket& psi);

/// Reduced state on subsystem `keep` of a composite with the given factor
/// dimensions.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& dims, int keep);

/// -sum lambda_i log2(lambda_i), with 0 log 0 := 0. Result in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// (1/sqrt(d)) sum_i |ii>
Ket phi_plus(int d);

/// (1/sqrt(d)) sum_i |i...i> on n parties.
Ket ghz(int n, int d);

/// <ab|rho|ab>, clamped to [0, 1].
double joint_probability(const DensityMatrix& rho, const Ket& a, const Ket& b);

/// Entrywise complex conjugate of a ket.
Ket conjugate(const Ket& k);

}  // namespace mubq
