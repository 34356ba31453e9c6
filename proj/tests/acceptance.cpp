// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Tolerances and budgets are pinned here on purpose; editing
// them is changing the contract, not fixing a test.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "support/multilinear_oracle.hpp"
#include "t23/bounds.hpp"
#include "t23/coeffs.hpp"
#include "t23/extremal.hpp"
#include "t23/highdim.hpp"
#include "t23/psi.hpp"
#include "t23/rand.hpp"
#include "t23/schwarz.hpp"

using namespace t23;

namespace {

int failures = 0;

void report(int index, const char* label, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", index, label, detail.c_str());
  if (!pass) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* spec, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, spec, a, b, c);
  return buf;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double bound = sharp_bound_t23(PsiTarget::halfplane()).bound;
  const double elapsed = ms_since(t0);
  const bool pass = std::abs(bound - 2.0) <= 1e-13 && elapsed < 1.0;
  report(1, "halfplane bound equals 2", pass, fmt("bound %.17g, %.3f ms", bound, elapsed));
}

void criterion2() {
  double worst = 0.0;
  for (int i = 0; i <= 9; ++i) {
    const double a = 0.1 * i;
    const double expected = (1.0 - a) * (1.0 - a) * (3.0 - 2.0 * a) * (3.0 - 2.0 * a) / 9.0 +
                            (1.0 - a) * (1.0 - a) * (2.0 - a) * (2.0 - a) * (3.0 - 2.0 * a) *
                                (3.0 - 2.0 * a) / 36.0;
    worst = std::max(worst, std::abs(sharp_bound_t23(PsiTarget::order_alpha(a)).bound - expected));
  }
  report(2, "order-alpha bound formula on the 0..0.9 grid", worst <= 1e-12,
         fmt("worst |diff| %.3e", worst));
}

void criterion3() {
  double worst = 0.0;
  std::vector<double> betas{2.0 / 3.0};
  for (int i = 7; i <= 10; ++i) betas.push_back(0.1 * i);
  for (const double b : betas) {
    const double expected =
        b * b * b * b + b * b * (1.0 + 17.0 * b * b) * (1.0 + 17.0 * b * b) / 324.0;
    worst = std::max(worst, std::abs(sharp_bound_t23(PsiTarget::strong_beta(b)).bound - expected));
  }
  report(3, "strong-beta bound formula on the 2/3..1 grid", worst <= 1e-12,
         fmt("worst |diff| %.3e", worst));
}

void criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (uint64_t i = 0; i < 10000; ++i) {
    std::mt19937_64 rng = make_rng(1001, i);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int family = static_cast<int>(i % 3);
    const PsiTarget psi = family == 0   ? PsiTarget::halfplane()
                          : family == 1 ? PsiTarget::order_alpha(0.95 * unit(rng))
                                        : PsiTarget::strong_beta(std::min(1.0, 0.05 + 0.95 * unit(rng)));
    SchurParams p;
    for (auto& g : p.gamma) g = uniform_disk(rng);
    const SchwarzJet jet = jet_from_schur(p);
    const CoefficientVector rec = coeffs_from_subordination(psi, jet);
    worst = std::max(worst, std::abs(rec.a3 - a3_closed_form(psi, jet)));
    worst = std::max(worst, std::abs(rec.a4 - a4_closed_form(psi, jet)));
  }
  const double elapsed = ms_since(t0);
  report(4, "recurrence matches closed forms on 1e4 draws", worst <= 1e-12 && elapsed < 2000.0,
         fmt("worst |diff| %.3e, %.0f ms", worst, elapsed));
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const cplx lambdas[] = {cplx(0.0),  cplx(0.5), cplx(-0.5),     cplx(1.0),
                          cplx(-1.0), cplx(2.0), cplx(-2.0),     cplx(5.0),
                          cplx(-5.0), cplx(0.0, 1.0), cplx(0.0, 2.0)};
  long violations = 0;
  double worst = -1e300;
  for (uint64_t i = 0; i < 100000; ++i) {
    const SchwarzJet jet = sample_schwarz_jet(1005, i);
    for (const cplx& lam : lambdas) {
      const double excess = lemma1_functional(jet, lam) - std::max(1.0, std::abs(lam)) - 1e-12;
      worst = std::max(worst, excess);
      if (excess > 0.0) ++violations;
    }
    for (int region = 1; region <= 7; ++region) {
      std::mt19937_64 rng = make_rng(1005, (static_cast<uint64_t>(region) << 32) | i);
      const RegionPoint pt = sample_point_in_region(region, rng);
      const auto cap = lemma2_admissible_bound(pt);
      if (!cap) {
        ++violations;
        continue;
      }
      const double excess = lemma2_functional(jet, pt.nu1, pt.nu2) - *cap - 1e-12;
      worst = std::max(worst, excess);
      if (excess > 0.0) ++violations;
    }
  }
  const double elapsed = ms_since(t0);
  report(5, "coefficient-functional caps on 1e5 jets", violations == 0 && elapsed < 30000.0,
         fmt("violations %.0f, worst excess %.3e, %.0f ms", double(violations), worst, elapsed));
}

void criterion6and7() {
  const PsiTarget targets[] = {PsiTarget::halfplane(), PsiTarget::order_alpha(0.5),
                               PsiTarget::strong_beta(0.8)};
  bool sound = true, sharp = true;
  std::string detail6, detail7;
  for (const PsiTarget& psi : targets) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchReport rep = sharpness_search(psi, 100000, 2024);
    const double elapsed = ms_since(t0);
    if (rep.best > rep.bound + 1e-9 || elapsed >= 60000.0) sound = false;
    if (rep.best < rep.bound - 1e-6) sharp = false;
    detail6 += fmt("%.2e/", rep.best - rep.bound);
    detail7 += fmt("%.2e/", rep.bound - rep.best);
  }
  report(6, "search never exceeds the bound (1e5 budget per family)", sound,
         "best-bound " + detail6);

  double worst_gap = 0.0;
  for (const double a : {0.0, 0.3, 0.6, 0.9})
    worst_gap = std::max(worst_gap, std::abs(verify_attainment(PsiTarget::order_alpha(a)).gap));
  for (const double b : {2.0 / 3.0, 0.8, 1.0})
    worst_gap = std::max(worst_gap, std::abs(verify_attainment(PsiTarget::strong_beta(b)).gap));
  report(7, "search reaches the bound; extremal attains it", sharp && worst_gap <= 1e-10,
         "bound-best " + detail7 + fmt(" attain gap %.2e", worst_gap));
}

void criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  long violations = 0;
  long checks = 0;
  for (const Norm norm : {Norm::l2, Norm::linf}) {
    for (const int n : {2, 3}) {
      for (uint64_t i = 0; i < 2500; ++i) {
        std::mt19937_64 rng = make_rng(1008 + n, i);
        SchurParams p;
        for (auto& g : p.gamma) g = uniform_disk(rng);
        const Vec u = sample_unit_direction(norm, n, rng);
        const SeedMapping m = SeedMapping::schwarz_seed(
            i % 2 == 0 ? PsiTarget::halfplane() : PsiTarget::strong_beta(0.9), p, u, norm);
        const Vec z = sample_domain_point(norm, n, rng);
        ++checks;
        if (!t41_check(m, z).holds) ++violations;
        if (norm == Norm::linf) {
          ++checks;
          if (!t42_sides(m, z).holds) ++violations;
        }
      }
    }
  }

  double worst_eq = 0.0;
  for (const double r : {0.25, 0.5, 0.75}) {
    const SeedMapping ball = SeedMapping::extremal_ball(PsiTarget::halfplane(), {cplx(1.0), cplx(0.0)});
    const CheckResult res = t41_check(ball, {cplx(r), cplx(0.0)});
    worst_eq = std::max(worst_eq, std::abs(res.rhs - res.lhs));
  }
  double worst_poly = 0.0;
  for (const double r : {0.1, 0.5, 0.9}) {
    const SeedMapping poly = SeedMapping::extremal_polydisk(PsiTarget::halfplane(), 2);
    const CheckResult res = t42_sides(poly, {cplx(r), cplx(0.0)});
    const double expected = std::pow(r, 5) + std::pow(r, 7);
    worst_poly = std::max(worst_poly, std::abs(res.lhs - expected));
    worst_poly = std::max(worst_poly, std::abs(res.rhs - expected));
  }
  const double elapsed = ms_since(t0);
  const bool pass = violations == 0 && worst_eq <= 1e-9 && worst_poly <= 1e-9 && elapsed < 60000.0;
  report(8, "operator inequalities in dimensions 2 and 3", pass,
         fmt("violations %.0f over 1e4 draws, eq gaps %.2e/%.2e", double(violations), worst_eq,
             worst_poly) +
             fmt(", %.0f ms", elapsed));
  (void)checks;
}

void criterion9() {
  double worst = 0.0;
  for (uint64_t i = 0; i < 40; ++i) {
    std::mt19937_64 rng = make_rng(1009, i);
    SchurParams p;
    for (auto& g : p.gamma) g = uniform_disk(rng);
    const Vec u = sample_unit_direction(Norm::linf, 2, rng);
    const SeedMapping m = SeedMapping::schwarz_seed(PsiTarget::halfplane(), p, u, Norm::linf);
    const Vec z = sample_domain_point(Norm::linf, 2, rng);

    const Series fjet = directional_jet(m, z, 3).fjet;
    const cplx b2 = fjet[2], b3 = fjet[3];
    Vec v3(z.size()), v4(z.size());
    for (size_t k = 0; k < z.size(); ++k) {
      v3[k] = b2 * z[k];
      v4[k] = b3 * z[k];
    }
    const Vec quartic = testing::polarized_form(m, 4, {z, z, z, v4});
    const Vec cubic = testing::polarized_form(m, 3, {z, z, v3});
    for (size_t k = 0; k < z.size(); ++k)
      worst = std::max(worst, std::abs(quartic[k] - cubic[k] - z[k] * (b3 * b3 - b2 * b2)));
  }
  report(9, "multilinear collapse matches the polarization oracle", worst <= 1e-11,
         fmt("worst |diff| %.3e", worst));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6and7();
  criterion8();
  criterion9();
  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
