#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mubquant/qcore.hpp"
#include "test_helpers.hpp"

using namespace mubq;
using mubq::testing::random_density;
using mubq::testing::random_pure_state;

namespace {

Ket basis_ket(int d, int i) {
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return Ket(std::move(v));
}

}  // namespace

TEST_CASE("Ket rejects non-normalized amplitudes") {
  Vector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(Ket{v}, std::invalid_argument);
}

TEST_CASE("DensityMatrix invariants are enforced") {
  Matrix m = Matrix::Identity(2, 2) / 2.0;
  CHECK_NOTHROW(DensityMatrix{m});

  Matrix not_hermitian = m;
  not_hermitian(0, 1) = Complex(0.0, 1e-3);
  CHECK_THROWS_AS(DensityMatrix{not_hermitian}, std::invalid_argument);

  CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(2, 2)),
                  std::invalid_argument);

  Matrix not_psd(2, 2);
  not_psd << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{not_psd}, std::invalid_argument);
}

TEST_CASE("fourier_mub d=2 is the Hadamard pair") {
  const MubPair mub = fourier_mub(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(mub.basis2[0][0] - Complex(r, 0)) < 1e-14);
  CHECK(std::abs(mub.basis2[0][1] - Complex(r, 0)) < 1e-14);
  CHECK(std::abs(mub.basis2[1][0] - Complex(r, 0)) < 1e-14);
  CHECK(std::abs(mub.basis2[1][1] - Complex(-r, 0)) < 1e-14);
}

TEST_CASE("fourier_mub cross overlaps are 1/d") {
  for (int d : {3, 6}) {
    const MubPair mub = fourier_mub(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Complex overlap =
            mub.basis1[i].amplitudes().dot(mub.basis2[j].amplitudes());
        CHECK(std::norm(overlap) == doctest::Approx(1.0 / d).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(fourier_mub(1), std::invalid_argument);
}

TEST_CASE("random_mub_pair is unbiased and seed-deterministic") {
  const MubPair a = random_mub_pair(4, 7);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex overlap =
          a.basis1[i].amplitudes().dot(a.basis2[j].amplitudes());
      CHECK(std::abs(std::norm(overlap) - 0.25) < 1e-10);
    }
  }
  const MubPair b = random_mub_pair(4, 7);
  for (int i = 0; i < 4; ++i) {
    CHECK((a.basis1[i].amplitudes() - b.basis1[i].amplitudes()).norm() == 0.0);
    CHECK((a.basis2[i].amplitudes() - b.basis2[i].amplitudes()).norm() == 0.0);
  }
  const MubPair c = random_mub_pair(3, 1);
  const MubPair e = random_mub_pair(3, 2);
  CHECK((c.basis1[0].amplitudes() - e.basis1[0].amplitudes()).norm() > 1e-6);
}

TEST_CASE("tensor products") {
  const Ket zero = basis_ket(2, 0);
  const Ket one = basis_ket(2, 1);
  const Ket zo = tensor(zero, one);
  CHECK(std::abs(zo[1] - Complex(1, 0)) < 1e-15);  // index d*0 + 1

  const DensityMatrix half(Matrix::Identity(2, 2) / 2.0);
  const DensityMatrix quarter = tensor(half, half);
  CHECK((quarter.entries() - Matrix::Identity(4, 4) / 4.0).norm() < 1e-15);

  CHECK(pure_density(phi_plus(3)).dim() == 9);
}

TEST_CASE("partial_trace basics") {
  const DensityMatrix reduced =
      partial_trace(pure_density(phi_plus(3)), {3, 3}, 0);
  CHECK((reduced.entries() - Matrix::Identity(3, 3) / 3.0).norm() < 1e-12);

  std::mt19937_64 rng(11);
  const DensityMatrix sigma = random_density(3, rng);
  const DensityMatrix product = tensor(pure_density(basis_ket(2, 0)), sigma);
  const DensityMatrix back = partial_trace(product, {2, 3}, 1);
  CHECK((back.entries() - sigma.entries()).norm() < 1e-12);

  const DensityMatrix ghz_first =
      partial_trace(pure_density(ghz(3, 2)), {2, 2, 2}, 0);
  CHECK((ghz_first.entries() - Matrix::Identity(2, 2) / 2.0).norm() < 1e-12);

  CHECK_THROWS_AS(partial_trace(sigma, {2, 2}, 0), std::invalid_argument);
}

TEST_CASE("partial_trace inverts tensor on random factors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix a = random_density(3, rng);
    const DensityMatrix b = random_density(4, rng);
    const DensityMatrix joint = tensor(a, b);
    CHECK((partial_trace(joint, {3, 4}, 0).entries() - a.entries()).norm() <
          1e-12);
    CHECK((partial_trace(joint, {3, 4}, 1).entries() - b.entries()).norm() <
          1e-12);
  }
}

TEST_CASE("von Neumann entropy reference values") {
  CHECK(von_neumann_entropy(DensityMatrix(Matrix::Identity(2, 2) / 2.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(pure_density(basis_ket(2, 0))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(DensityMatrix(Matrix::Identity(4, 4) / 4.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_density(5, rng);
    const Matrix u = haar_unitary(5, rng);
    const DensityMatrix rotated(u * rho.entries() * u.adjoint());
    CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <
          1e-9);
  }
}

TEST_CASE("phi_plus and ghz states") {
  const Ket bell = phi_plus(2);
  CHECK(std::abs(bell[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(bell[3] - 1.0 / std::numbers::sqrt2) < 1e-15);

  const Ket g = ghz(3, 2);
  CHECK(std::abs(g[0] - 1.0 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(g[7] - 1.0 / std::numbers::sqrt2) < 1e-15);

  CHECK(ghz(3, 3).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(phi_plus(1), std::invalid_argument);
  CHECK_THROWS_AS(ghz(1, 2), std::invalid_argument);
}

TEST_CASE("phi_plus reduction is maximally mixed for d up to 16") {
  for (int d = 2; d <= 16; ++d) {
    const DensityMatrix reduced =
        partial_trace(pure_density(phi_plus(d)), {d, d}, 0);
    CHECK((reduced.entries() - Matrix::Identity(d, d) / double(d)).norm() <
          1e-12);
    CHECK(std::abs(von_neumann_entropy(reduced) - std::log2(double(d))) <
          1e-9);
  }
}

TEST_CASE("joint_probability reference values") {
  const Ket zero = basis_ket(2, 0);
  const Ket one = basis_ket(2, 1);
  CHECK(joint_probability(pure_density(tensor(zero, one)), zero, one) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(joint_probability(pure_density(phi_plus(2)), zero, one) ==
        doctest::Approx(0.0).epsilon(1e-12));
  const DensityMatrix mixed(Matrix::Identity(4, 4) / 4.0);
  std::mt19937_64 rng(3);
  CHECK(joint_probability(mixed, random_pure_state(2, rng),
                          random_pure_state(2, rng)) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(joint_probability(mixed, basis_ket(3, 0), basis_ket(3, 0)),
                  std::invalid_argument);
}
