#include "mubquant/oracle.hpp"

#include <cmath>
#include <limits>

#include "mubquant/witness.hpp"

namespace mubq {

namespace {

Matrix basis_as_matrix(const std::vector<Ket>& basis) {
  const int d = static_cast<int>(basis.size());
  Matrix u(d, d);
  for (int k = 0; k < d; ++k) u.col(k) = basis[k].amplitudes();
  return u;
}

// Rewrites rho in the frame where basis1 is the computational basis, with
// the conjugate frame on party B (the |v v*> correlation convention).
Matrix rotate_to_basis(const DensityMatrix& rho, const Matrix& u) {
  const int d = static_cast<int>(u.rows());
  Matrix w(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      w.block(i * d, j * d, d, d) = u(i, j) * u.conjugate();
    }
  }
  return w.adjoint() * rho.entries() * w;
}

double clamped(double p) { return std::max(p, 0.0); }

}  // namespace

double concurrence_bound_i(const DensityMatrix& rho,
                           const std::vector<Ket>& basis1) {
  const int d = static_cast<int>(basis1.size());
  if (static_cast<long long>(d) * d != rho.dim()) {
    throw std::invalid_argument("concurrence_bound_i: dimension mismatch");
  }
  const Matrix r = rotate_to_basis(rho, basis_as_matrix(basis1));
  double sum = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      if (n == m) continue;
      const double coherence = std::abs(r(m * d + m, n * d + n));
      const double cross = std::sqrt(clamped(r(m * d + n, m * d + n).real()) *
                                     clamped(r(n * d + m, n * d + m).real()));
      sum += coherence - cross;
    }
  }
  return std::sqrt(2.0 / (d * (d - 1.0))) * sum;
}

SigmaSplit sigma_split(const DensityMatrix& rho, const MubPair& mubs) {
  const int d = mubs.dim;
  if (static_cast<long long>(d) * d != rho.dim()) {
    throw std::invalid_argument("sigma_split: dimension mismatch");
  }
  const Matrix u = basis_as_matrix(mubs.basis1);
  const Matrix r = rotate_to_basis(rho, u);
  // Basis-2 vectors in the frame where basis1 is computational.
  Matrix v(d, d);
  for (int k = 0; k < d; ++k) {
    v.col(k) = u.adjoint() * mubs.basis2[k].amplitudes();
  }

  SigmaSplit split{};
  for (int k = 0; k < d; ++k) {
    Vector vk(d * d);
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        vk(m * d + n) = v(m, k) * std::conj(v(n, k));
      }
    }
    split.sigma += (vk.adjoint() * r * vk)(0).real();
  }

  split.sigma1 = 1.0 / d;

  for (int m = 0; m < d; ++m) {
    for (int l = 0; l < d; ++l) {
      if (l == m) continue;
      split.sigma2 += r(m * d + m, l * d + l).real() / d;
    }
  }

  Complex s3(0.0, 0.0);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      if (n == m) continue;
      for (int l = 0; l < d; ++l) {
        if (l == m) continue;
        for (int o = 0; o < d; ++o) {
          if (o == l || o == n) continue;
          Complex c(0.0, 0.0);
          for (int k = 0; k < d; ++k) {
            c += std::conj(v(m, k)) * v(n, k) * std::conj(v(o, k)) * v(l, k);
          }
          c *= static_cast<double>(d) * d;
          if (std::abs(c) > d + 1e-6) {
            throw std::logic_error("sigma_split: |c_{m,n,l,o}| exceeds d");
          }
          s3 += c * r(m * d + n, l * d + o);
        }
      }
    }
  }
  split.sigma3 = (s3 / static_cast<double>(d * d)).real();

  if (std::abs(split.sigma - split.sigma1 - split.sigma2 - split.sigma3) >
      1e-8) {
    throw std::logic_error("sigma_split: additive identity violated");
  }
  return split;
}

double pure_state_eof(const Ket& psi, int dim_a, int dim_b) {
  if (static_cast<long long>(dim_a) * dim_b != psi.dim()) {
    throw std::invalid_argument("pure_state_eof: dimension mismatch");
  }
  const DensityMatrix reduced =
      partial_trace(pure_density(psi), {dim_a, dim_b}, 0);
  return von_neumann_entropy(reduced);
}

ChainReport chain_check(const DensityMatrix& rho, const MubPair& mubs) {
  const int d = mubs.dim;
  ChainReport report{};
  report.b = witness_b_from_state(rho, mubs);
  report.i = concurrence_bound_i(rho, mubs.basis1);
  report.b_le_i = report.b <= report.i + 1e-9;

  const double purity = (rho.entries() * rho.entries()).trace().real();
  report.is_pure = purity > 1.0 - 1e-10;
  report.i_le_pure_limit = true;
  report.pure_limit = std::numeric_limits<double>::quiet_NaN();
  if (report.is_pure) {
    const DensityMatrix reduced = partial_trace(rho, {d, d}, 0);
    const double purity_a =
        (reduced.entries() * reduced.entries()).trace().real();
    report.pure_limit = std::sqrt(std::max(2.0 * (1.0 - purity_a), 0.0));
    report.i_le_pure_limit = report.i <= report.pure_limit + 1e-9;
  }
  return report;
}

}  // namespace mubq
