#include <doctest.h>

#include <cmath>

#include "mubquant/noise.hpp"
#include "mubquant/witness.hpp"

using namespace mubq;

TEST_CASE("dephased_state endpoints") {
  const DensityMatrix full = dephased_state(3, 1.0);
  CHECK((full.entries() - pure_density(phi_plus(3)).entries()).norm() <
        1e-12);

  const DensityMatrix dephased = dephased_state(2, 0.0);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK((dephased.entries() - expected).norm() < 1e-12);

  CHECK_THROWS_AS(dephased_state(3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(dephased_state(3, -0.1), std::invalid_argument);
}

TEST_CASE("isotropic_state endpoints") {
  CHECK((isotropic_state(3, 0.0).entries() - Matrix::Identity(9, 9) / 9.0)
            .norm() < 1e-12);
  CHECK((isotropic_state(3, 1.0).entries() -
         pure_density(phi_plus(3)).entries())
            .norm() < 1e-12);

  // The d=2 separability boundary point must not be detected.
  CHECK(witness_b_from_state(isotropic_state(2, 1.0 / 3.0), fourier_mub(2)) <=
        1e-9);
}

TEST_CASE("critical_noise_direct reference roots") {
  CHECK(std::abs(critical_noise_direct(NoiseFamily::white, 2,
                                       fourier_mub(2)) -
                 0.5) < 1e-9);
  CHECK(std::abs(critical_noise_direct(NoiseFamily::white, 3,
                                       fourier_mub(3)) -
                 4.0 / 7.0) < 1e-9);
  CHECK(critical_noise_direct(NoiseFamily::dephasing, 3, fourier_mub(3)) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("paper_pcrit evaluates the printed closed forms verbatim") {
  CHECK(paper_pcrit(NoiseFamily::dephasing, 3) == doctest::Approx(0.25));
  CHECK(paper_pcrit(NoiseFamily::white, 3) == doctest::Approx(0.4));
  CHECK(paper_pcrit(NoiseFamily::white, 2) == doctest::Approx(0.0));
}

TEST_CASE("b(p) is affine and non-decreasing on the scan grid") {
  for (NoiseFamily family : {NoiseFamily::dephasing, NoiseFamily::white}) {
    for (int d : {2, 3, 4}) {
      const NoiseScan scan = scan_noise(family, d, fourier_mub(d));
      REQUIRE(scan.samples.size() >= 3);
      const auto [p0, b0] = scan.samples.front();
      const auto [p1, b1] = scan.samples.back();
      const double slope = (b1 - b0) / (p1 - p0);
      for (const auto& [p, b] : scan.samples) {
        CHECK(std::abs(b - (b0 + slope * (p - p0))) < 1e-9);
      }
      for (std::size_t i = 1; i < scan.samples.size(); ++i) {
        CHECK(scan.samples[i].second >=
              scan.samples[i - 1].second - 1e-12);
      }
    }
  }
}

TEST_CASE("direct root sits on the affine secant") {
  for (NoiseFamily family : {NoiseFamily::dephasing, NoiseFamily::white}) {
    for (int d : {2, 3, 4, 5}) {
      const NoiseScan scan = scan_noise(family, d, fourier_mub(d));
      const auto [p0, b0] = scan.samples.front();
      const auto [p1, b1] = scan.samples.back();
      const double slope = (b1 - b0) / (p1 - p0);
      const double pc = scan.p_crit_direct;
      if (pc > 0.0 && pc < 1.0) {
        CHECK(std::abs(b0 + slope * (pc - p0)) < 1e-8);
      }
      CHECK(scan.p_crit_paper_formula == paper_pcrit(family, d));
    }
  }
}

TEST_CASE("white-noise threshold does not depend on the basis pair") {
  for (int d : {2, 3, 4}) {
    const double reference =
        critical_noise_direct(NoiseFamily::white, d, fourier_mub(d));
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      CHECK(std::abs(critical_noise_direct(NoiseFamily::white, d,
                                           random_mub_pair(d, seed)) -
                     reference) < 1e-8);
    }
  }
}

TEST_CASE("the documented closed-form discrepancy is flagged") {
  const NoiseScan dephasing = scan_noise(NoiseFamily::dephasing, 3,
                                         fourier_mub(3));
  CHECK(dephasing.formula_discrepancy);  // direct 0 vs printed 1/4

  const NoiseScan white2 = scan_noise(NoiseFamily::white, 2, fourier_mub(2));
  CHECK(white2.formula_discrepancy);  // direct 1/2 vs printed 0
}
