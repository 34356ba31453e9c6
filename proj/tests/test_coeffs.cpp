#include <complex>

#include "catch2/catch_amalgamated.hpp"
#include "t23/coeffs.hpp"
#include "t23/rand.hpp"
#include "t23/schwarz.hpp"

using t23::cplx;
using t23::CoefficientVector;
using t23::PsiTarget;
using t23::SchwarzJet;

namespace {

SchwarzJet random_jet(uint64_t seed, uint64_t index) { return t23::sample_schwarz_jet(seed, index); }

}  // namespace

TEST_CASE("identity rotation jet under the halfplane target") {
  const SchwarzJet w{cplx(1.0), cplx(0.0), cplx(0.0), std::nullopt};
  const CoefficientVector c = t23::coeffs_from_subordination(PsiTarget::halfplane(), w);
  CHECK(std::abs(c.a2 - cplx(1.0)) < 1e-14);
  CHECK(std::abs(c.a3 - cplx(1.0)) < 1e-14);
  CHECK(std::abs(c.a4 - cplx(1.0)) < 1e-14);
}

TEST_CASE("quarter-turn rotation jet under the halfplane target") {
  const SchwarzJet w{cplx(0.0, 1.0), cplx(0.0), cplx(0.0), std::nullopt};
  const CoefficientVector c = t23::coeffs_from_subordination(PsiTarget::halfplane(), w);
  CHECK(std::abs(c.a2 - cplx(0.0, 1.0)) < 1e-14);
  CHECK(std::abs(c.a3 - cplx(-1.0, 0.0)) < 1e-14);
  CHECK(std::abs(c.a4 - cplx(0.0, -1.0)) < 1e-14);
}

TEST_CASE("zero jet maps to the identity function") {
  const SchwarzJet w{cplx(0.0), cplx(0.0), cplx(0.0), std::nullopt};
  const CoefficientVector c = t23::coeffs_from_subordination(PsiTarget::halfplane(), w);
  CHECK(c.a2 == cplx(0.0));
  CHECK(c.a3 == cplx(0.0));
  CHECK(c.a4 == cplx(0.0));
}

TEST_CASE("closed forms match the recurrence across families") {
  for (uint64_t i = 0; i < 3000; ++i) {
    const PsiTarget psi = i % 3 == 0   ? PsiTarget::halfplane()
                          : i % 3 == 1 ? PsiTarget::order_alpha(0.3)
                                       : PsiTarget::strong_beta(0.7);
    const SchwarzJet w = random_jet(31, i);
    const CoefficientVector rec = t23::coeffs_from_subordination(psi, w);
    CHECK(std::abs(rec.a3 - t23::a3_closed_form(psi, w)) < 1e-13);
    CHECK(std::abs(rec.a4 - t23::a4_closed_form(psi, w)) < 1e-13);
  }
}

TEST_CASE("rotating the jet rotates the coefficients covariantly") {
  const PsiTarget psi = PsiTarget::strong_beta(0.8);
  const SchwarzJet w = random_jet(32, 5);
  const cplx tau = std::polar(1.0, 0.7);
  const SchwarzJet rotated{w.c1 * tau, w.c2 * tau * tau, w.c3 * tau * tau * tau, std::nullopt};
  const CoefficientVector base = t23::coeffs_from_subordination(psi, w);
  const CoefficientVector rot = t23::coeffs_from_subordination(psi, rotated);
  CHECK(std::abs(rot.a2 - base.a2 * tau) < 1e-13);
  CHECK(std::abs(rot.a3 - base.a3 * tau * tau) < 1e-13);
  CHECK(std::abs(rot.a4 - base.a4 * tau * tau * tau) < 1e-13);
}

TEST_CASE("closed forms reject a degenerate first derivative") {
  const PsiTarget psi = PsiTarget::custom({0.0, 1.0, 0.0});
  const SchwarzJet w = random_jet(33, 0);
  CHECK_THROWS_AS(t23::a3_closed_form(psi, w), std::domain_error);
  CHECK_THROWS_AS(t23::a4_closed_form(psi, w), std::domain_error);
}

TEST_CASE("symmetric Toeplitz determinant at the all-ones point") {
  // det for first row (a1, a2, a3) expands to
  // a1^3 - 2 a1 a2^2 + 2 a2^2 a3 - a1 a3^2, which vanishes at (1, 1, 1).
  const std::vector<cplx> ones{1.0, 1.0, 1.0};
  CHECK(std::abs(t23::toeplitz_det(ones, 3, 1)) < 1e-15);
}

TEST_CASE("third-order determinant matches its expansion on random data") {
  for (uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng = t23::make_rng(34, i);
    const cplx x = t23::uniform_disk(rng), y = t23::uniform_disk(rng), w = t23::uniform_disk(rng);
    const cplx direct = x * x * x - 2.0 * x * y * y + 2.0 * y * y * w - x * w * w;
    CHECK(std::abs(t23::toeplitz_det({x, y, w}, 3, 1) - direct) < 1e-13);
  }
}

TEST_CASE("small determinants agree with the pivoted elimination path") {
  for (uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 rng = t23::make_rng(35, i);
    std::vector<cplx> coeffs(8);
    for (auto& c : coeffs) c = t23::uniform_disk(rng);
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n + m - 1 <= 4; ++n) {
        const cplx via_lu = t23::detail::toeplitz_det_lu(coeffs, m, n);
        CHECK(std::abs(t23::toeplitz_det(coeffs, m, n) - via_lu) < 1e-12);
      }
    }
  }
}

TEST_CASE("determinant argument validation") {
  const std::vector<cplx> coeffs{1.0, 2.0};
  CHECK_THROWS_AS(t23::toeplitz_det(coeffs, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(t23::toeplitz_det(coeffs, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(t23::toeplitz_det(coeffs, 3, 1), std::invalid_argument);
}

TEST_CASE("second-order determinant modulus at pinned coefficients") {
  CHECK(t23::t23_value({cplx(0.0), cplx(1.0), cplx(1.0)}) == 0.0);
  CHECK(t23::t23_value({cplx(0.0), cplx(-1.0, 0.0), cplx(0.0, -1.0)}) == 2.0);
  const CoefficientVector c{cplx(0.0), cplx(3.0), cplx(2.0)};
  CHECK(t23::t23_value(c) == 5.0);
}
