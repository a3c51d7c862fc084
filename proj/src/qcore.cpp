#include "mubquant/qcore.hpp"

#include <cmath>
#include <numbers>

namespace mubq {

Ket::Ket(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) {
    throw std::invalid_argument("Ket: dimension must be positive");
  }
  if (std::abs(amps_.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("Ket: amplitudes are not normalized");
  }
}

DensityMatrix::DensityMatrix(Matrix entries) : mat_(std::move(entries)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_,
                                               Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdTol) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
}

namespace {

void check_orthonormal(const std::vector<Ket>& basis, int d,
                       const char* label) {
  if (static_cast<int>(basis.size()) != d) {
    throw std::invalid_argument(std::string(label) + ": wrong basis size");
  }
  for (int i = 0; i < d; ++i) {
    if (basis[i].dim() != d) {
      throw std::invalid_argument(std::string(label) + ": wrong ket dim");
    }
    for (int j = 0; j < d; ++j) {
      const Complex g = basis[i].amplitudes().dot(basis[j].amplitudes());
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) > 10 * kNormTol) {
        throw std::invalid_argument(std::string(label) +
                                    ": basis is not orthonormal");
      }
    }
  }
}

}  // namespace

MubPair::MubPair(std::vector<Ket> b1, std::vector<Ket> b2)
    : dim(static_cast<int>(b1.size())),
      basis1(std::move(b1)),
      basis2(std::move(b2)) {
  if (dim < 2) {
    throw std::invalid_argument("MubPair: dimension must be at least 2");
  }
  check_orthonormal(basis1, dim, "MubPair basis1");
  check_orthonormal(basis2, dim, "MubPair basis2");
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Complex overlap =
          basis1[i].amplitudes().dot(basis2[j].amplitudes());
      if (std::abs(std::norm(overlap) - 1.0 / dim) > kUnbiasedTol) {
        throw std::invalid_argument("MubPair: bases are not unbiased");
      }
    }
  }
}

Matrix fourier_matrix(int d) {
  if (d < 2) {
    throw std::invalid_argument("fourier_matrix: dimension must be >= 2");
  }
  Matrix f(d, d);
  const double step = 2.0 * std::numbers::pi / d;
  for (int k = 0; k < d; ++k) {
    for (int m = 0; m < d; ++m) {
      f(m, k) = std::polar(1.0 / std::sqrt(double(d)), step * k * m);
    }
  }
  return f;
}

namespace {

std::vector<Ket> columns_as_kets(const Matrix& u) {
  std::vector<Ket> kets;
  kets.reserve(u.cols());
  for (int k = 0; k < u.cols(); ++k) {
    kets.emplace_back(u.col(k));
  }
  return kets;
}

}  // namespace

MubPair fourier_mub(int d) {
  if (d < 2) {
    throw std::invalid_argument("fourier_mub: dimension must be >= 2");
  }
  return MubPair(columns_as_kets(Matrix::Identity(d, d)),
                 columns_as_kets(fourier_matrix(d)));
}

Matrix haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is Haar.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= (std::abs(rjj) > 0) ? rjj / std::abs(rjj) : Complex(1, 0);
  }
  return q;
}

MubPair random_mub_pair(int d, std::uint64_t seed) {
  if (d < 2) {
    throw std::invalid_argument("random_mub_pair: dimension must be >= 2");
  }
  std::mt19937_64 rng(seed);
  const Matrix u = haar_unitary(d, rng);
  return MubPair(columns_as_kets(u), columns_as_kets(u * fourier_matrix(d)));
}

Ket tensor(const Ket& a, const Ket& b) {
  const int da = a.dim();
  const int db = b.dim();
  Vector out(da * db);
  for (int i = 0; i < da; ++i) {
    out.segment(i * db, db) = a[i] * b.amplitudes();
  }
  return Ket(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.element(i, j) * b.entries();
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix pure_density(const Ket& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& dims, int keep) {
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: invalid dims");
    total *= d;
  }
  if (total != rho.dim()) {
    throw std::invalid_argument("partial_trace: dims do not match state");
  }
  if (keep < 0 || keep >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("partial_trace: invalid subsystem index");
  }

  const int n = static_cast<int>(dims.size());
  const int dk = dims[keep];
  // Strides of each subsystem index in the flat row-major composite index.
  std::vector<long long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  const long long rest = rho.dim() / dk;
  Matrix out = Matrix::Zero(dk, dk);
  for (long long e = 0; e < rest; ++e) {
    // Expand the environment index into a base offset.
    long long offset = 0;
    long long r = e;
    for (int s = n - 1; s >= 0; --s) {
      if (s == keep) continue;
      offset += (r % dims[s]) * stride[s];
      r /= dims[s];
    }
    for (int i = 0; i < dk; ++i) {
      for (int j = 0; j < dk; ++j) {
        out(i, j) += rho.element(static_cast<int>(offset + i * stride[keep]),
                                 static_cast<int>(offset + j * stride[keep]));
      }
    }
  }
  return DensityMatrix(std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.entries(),
                                               Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

Ket phi_plus(int d) {
  if (d < 2) throw std::invalid_argument("phi_plus: dimension must be >= 2");
  Vector v = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return Ket(std::move(v));
}

Ket ghz(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz: need n >= 2, d >= 2");
  long long dim = 1;
  for (int j = 0; j < n; ++j) dim *= d;
  Vector v = Vector::Zero(dim);
  long long stride = (dim - 1) / (d - 1);  // index of |i...i> is i * stride
  for (int i = 0; i < d; ++i) v(i * stride) = 1.0 / std::sqrt(double(d));
  return Ket(std::move(v));
}

double joint_probability(const DensityMatrix& rho, const Ket& a,
                         const Ket& b) {
  if (a.dim() * b.dim() != rho.dim()) {
    throw std::invalid_argument("joint_probability: dimension mismatch");
  }
  const Ket ab = tensor(a, b);
  const double p =
      (ab.amplitudes().adjoint() * rho.entries() * ab.amplitudes())(0).real();
  return std::clamp(p, 0.0, 1.0);
}

Ket conjugate(const Ket& k) { return Ket(k.amplitudes().conjugate()); }

}  // namespace mubq
