#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "t23/coeffs.hpp"
#include "t23/psi.hpp"
#include "t23/rand.hpp"
#include "t23/schwarz.hpp"

namespace t23 {

/// Parameter point of the cubic Schwarz-coefficient functional
/// |c3 + nu1 c1 c2 + nu2 c1^3|. nu1 may be complex; nu2 is real.
struct RegionPoint {
  cplx nu1{};
  double nu2{};
};

namespace detail {
/// Boundary ties within 1e-14 count as members.
inline constexpr double kRegionTie = 1e-14;
inline bool leq(double a, double b) { return a <= b + kRegionTie; }
inline bool geq(double a, double b) { return a + kRegionTie >= b; }
}  // namespace detail

/// Membership in a single region Theta_region:
///
///   Theta_1: |nu1| <= 1/2, |nu2| <= 1
///   Theta_2: 1/2 <= |nu1| <= 2, (4/27)(|nu1|+1)^3 - (|nu1|+1) <= nu2 <= 1
///   Theta_3: |nu1| <= 1/2, nu2 <= -1
///   Theta_4: |nu1| >= 1/2, nu2 <= -(2/3)(|nu1|+1)
///   Theta_5: |nu1| <= 2, nu2 >= 1
///   Theta_6: 2 <= |nu1| <= 4, nu2 >= (1/12)(|nu1|^2+8)
///   Theta_7: |nu1| >= 4, nu2 >= (2/3)(|nu1|-1)
inline bool region_contains(int region, const RegionPoint& pt) {
  using detail::geq;
  using detail::leq;
  const double m = std::abs(pt.nu1);
  const double v = pt.nu2;
  switch (region) {
    case 1:
      return leq(m, 0.5) && leq(std::abs(v), 1.0);
    case 2:
      return geq(m, 0.5) && leq(m, 2.0) &&
             geq(v, 4.0 / 27.0 * std::pow(m + 1.0, 3) - (m + 1.0)) && leq(v, 1.0);
    case 3:
      return leq(m, 0.5) && leq(v, -1.0);
    case 4:
      return geq(m, 0.5) && leq(v, -(2.0 / 3.0) * (m + 1.0));
    case 5:
      return leq(m, 2.0) && geq(v, 1.0);
    case 6:
      return geq(m, 2.0) && leq(m, 4.0) && geq(v, (m * m + 8.0) / 12.0);
    case 7:
      return geq(m, 4.0) && geq(v, (2.0 / 3.0) * (m - 1.0));
    default:
      throw std::invalid_argument("region_contains: region outside 1..7");
  }
}

/// Smallest index i in 1..7 with (nu1, nu2) in Theta_i, or nullopt.
inline std::optional<int> region_member(const RegionPoint& pt) {
  for (int i = 1; i <= 7; ++i)
    if (region_contains(i, pt)) return i;
  return std::nullopt;
}

/// Sharp value of sup |c3 + nu1 c1 c2 + nu2 c1^3| on the given region:
/// 1 on Theta_1 and Theta_2, |nu2| on Theta_3..Theta_7 (there |nu2| >= 1,
/// so the union-wide bound is max{1, |nu2|}).
inline double lemma2_region_bound(int region_index, double nu2) {
  if (region_index < 1 || region_index > 7)
    throw std::invalid_argument("lemma2_region_bound: region index outside 1..7");
  return region_index <= 2 ? 1.0 : std::abs(nu2);
}

/// Tightest region bound available at pt: regions overlap, so take the min
/// over every containing region. nullopt when pt is outside all seven.
inline std::optional<double> lemma2_admissible_bound(const RegionPoint& pt) {
  std::optional<double> best;
  for (int i = 1; i <= 7; ++i) {
    if (!region_contains(i, pt)) continue;
    const double b = lemma2_region_bound(i, pt.nu2);
    if (!best || b < *best) best = b;
  }
  return best;
}

/// One point drawn from inside Theta_region (uniform over a region-shaped box).
/// nu1 is drawn real with random sign: the region displays write |nu1| because
/// the cubic-functional bound folds the nu1 -> -nu1 symmetry of the real case,
/// and the bound is false for genuinely complex nu1 (e.g. |c3 + nu1 c1 c2 +
/// nu2 c1^3| can exceed 1 on Theta_2 when nu1 is near 2i).
inline RegionPoint sample_point_in_region(int region, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto in_range = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  auto signed_real = [&](double mag) { return cplx((rng() & 1) ? mag : -mag, 0.0); };

  RegionPoint pt;
  switch (region) {
    case 1: {
      pt.nu1 = signed_real(in_range(0.0, 0.5));
      pt.nu2 = -1.0 + 2.0 * unit(rng);
      break;
    }
    case 2: {
      const double m = in_range(0.5, 2.0);
      const double lower = 4.0 / 27.0 * std::pow(m + 1.0, 3) - (m + 1.0);
      pt.nu1 = signed_real(m);
      pt.nu2 = in_range(lower, 1.0);
      break;
    }
    case 3: {
      pt.nu1 = signed_real(in_range(0.0, 0.5));
      pt.nu2 = -1.0 - 2.0 * unit(rng);
      break;
    }
    case 4: {
      const double m = in_range(0.5, 6.0);
      pt.nu1 = signed_real(m);
      pt.nu2 = -(2.0 / 3.0) * (m + 1.0) - 3.0 * unit(rng);
      break;
    }
    case 5: {
      pt.nu1 = signed_real(in_range(0.0, 2.0));
      pt.nu2 = 1.0 + 3.0 * unit(rng);
      break;
    }
    case 6: {
      const double m = in_range(2.0, 4.0);
      pt.nu1 = signed_real(m);
      pt.nu2 = (m * m + 8.0) / 12.0 + 3.0 * unit(rng);
      break;
    }
    case 7: {
      const double m = in_range(4.0, 8.0);
      pt.nu1 = signed_real(m);
      pt.nu2 = (2.0 / 3.0) * (m - 1.0) + 4.0 * unit(rng);
      break;
    }
    default:
      throw std::invalid_argument("sample_point_in_region: region outside 1..7");
  }
  return pt;
}

/// (r1, r2) = ((3 psi1^2 + 2 psi2)/(2 psi1), (6 psi1^3 + 9 psi1 psi2 + 2 psi3)/(12 psi1)).
inline std::pair<double, double> r_params(const PsiTarget& psi) {
  const auto [psi1, psi2, psi3] = psi.jet();
  if (psi1 == 0.0) throw std::domain_error("r_params: psi1 = 0");
  const double r1 = (3.0 * psi1 * psi1 + 2.0 * psi2) / (2.0 * psi1);
  const double r2 = (6.0 * psi1 * psi1 * psi1 + 9.0 * psi1 * psi2 + 2.0 * psi3) / (12.0 * psi1);
  return {r1, r2};
}

/// r2 restated as (1/(2 psi1))(psi1^3 + (3/2) psi1 psi2 + psi3/3);
/// algebraically equal to r_params().second, kept as a written-out
/// cross-check of the bound's cubic term.
inline double r2_alternate_form(const PsiTarget& psi) {
  const auto [psi1, psi2, psi3] = psi.jet();
  if (psi1 == 0.0) throw std::domain_error("r2_alternate_form: psi1 = 0");
  return (psi1 * psi1 * psi1 + 1.5 * psi1 * psi2 + psi3 / 3.0) / (2.0 * psi1);
}

/// Gate |psi2 + 2 psi1^2| >= 2 psi1 (makes the a3 estimate collapse to the
/// quadratic form used in the closed bound).
inline bool hypothesis_ok(const PsiTarget& psi) {
  const auto [psi1, psi2, psi3] = psi.jet();
  return std::abs(psi2 + 2.0 * psi1 * psi1) >= 2.0 * psi1;
}

struct BoundReport {
  double bound{};
  double r1{};
  double r2{};
  std::optional<int> region_index{};
  bool hypothesis_ok{};
  bool formula_certified{};
  std::string notes{};
};

/// Sharp bound for |a3^2 - a4^2| over the class driven by psi:
/// (2 psi1^2 + psi2)^2 / 144 + (psi1^3 + (3/2) psi1 psi2 + psi3/3)^2 / 576.
/// The value is reported even when a gate fails; notes then say which.
/// formula_certified requires both gates: the quadratic gate, and an
/// admissible cubic cap at (r1, r2) no larger than r2 (so the cubic term of
/// the formula dominates what the cap certifies).
inline BoundReport sharp_bound_t23(const PsiTarget& psi) {
  const auto [psi1, psi2, psi3] = psi.jet();
  BoundReport rep;
  const auto [r1, r2] = r_params(psi);
  rep.r1 = r1;
  rep.r2 = r2;
  const RegionPoint pt{cplx(r1, 0.0), r2};
  rep.region_index = region_member(pt);
  rep.hypothesis_ok = hypothesis_ok(psi);
  const std::optional<double> cap = lemma2_admissible_bound(pt);
  rep.formula_certified = rep.hypothesis_ok && cap && *cap <= r2 + detail::kRegionTie;

  const double quad = 2.0 * psi1 * psi1 + psi2;
  const double cubic = psi1 * psi1 * psi1 + 1.5 * psi1 * psi2 + psi3 / 3.0;
  rep.bound = quad * quad / 144.0 + cubic * cubic / 576.0;

  if (!rep.hypothesis_ok) rep.notes += "hypotheses not met: |psi2 + 2 psi1^2| < 2 psi1; ";
  if (!cap) rep.notes += "hypotheses not met: (r1, r2) outside the regions; ";
  else if (*cap > r2 + detail::kRegionTie)
    rep.notes += "(r1, r2) only reaches unit-cap regions; the cubic term is not certified; ";
  return rep;
}

struct SearchReport {
  double bound{};
  double best{};
  double gap{};
  SchurParams best_params{};
  SchwarzJet best_jet{};
  long evals = 0;
  std::string notes{};
};

namespace detail {

/// Polar coordinates (r, theta) per Schur parameter; clamped to the closed disk.
struct SearchState {
  std::array<double, 6> x{};

  SchurParams params() const {
    SchurParams p;
    for (int j = 0; j < 3; ++j)
      p.gamma[static_cast<size_t>(j)] =
          std::polar(std::clamp(x[static_cast<size_t>(2 * j)], 0.0, 1.0), x[static_cast<size_t>(2 * j + 1)]);
    return p;
  }
};

}  // namespace detail

/// Multistart random search plus coordinate-wise refinement of
/// sup |a3^2 - a4^2| over Schwarz jets, derivative-free, halving the step
/// until it drops below 1e-9. Budget counts objective evaluations.
inline SearchReport sharpness_search(const PsiTarget& psi, long budget, uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("sharpness_search: budget < 1");

  SearchReport rep;
  const BoundReport bound = sharp_bound_t23(psi);
  rep.bound = bound.bound;
  if (!bound.notes.empty()) rep.notes = bound.notes;

  long evals = 0;
  auto objective = [&](const SchurParams& p) {
    ++evals;
    const SchwarzJet jet = jet_from_schur(p);
    return t23_value({cplx{}, a3_closed_form(psi, jet), a4_closed_form(psi, jet)});
  };

  // Random multistart phase: 40% of the budget.
  const long sample_budget = std::max<long>(1, (2 * budget) / 5);
  double best = -1.0;
  detail::SearchState best_state;
  for (long i = 0; i < sample_budget; ++i) {
    std::mt19937_64 rng = make_rng(seed, static_cast<uint64_t>(i));
    detail::SearchState st;
    for (int j = 0; j < 3; ++j) {
      const cplx g = uniform_disk(rng);
      st.x[static_cast<size_t>(2 * j)] = std::abs(g);
      st.x[static_cast<size_t>(2 * j + 1)] = std::arg(g);
    }
    const double v = objective(st.params());
    if (v > best) {
      best = v;
      best_state = st;
    }
  }

  // Greedy coordinate walk with step halving from the best start.
  detail::SearchState st = best_state;
  double step = 0.25;
  while (step >= 1e-9 && evals < budget) {
    bool improved = false;
    for (int c = 0; c < 6 && evals < budget; ++c) {
      const double scale = (c % 2 == 0) ? step : step * std::numbers::pi;
      for (double dir : {+1.0, -1.0}) {
        while (evals < budget) {
          detail::SearchState trial = st;
          trial.x[static_cast<size_t>(c)] += dir * scale;
          const double v = objective(trial.params());
          if (v > best) {
            best = v;
            st = trial;
            best_state = trial;
            improved = true;
          } else {
            break;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  rep.best = best;
  rep.best_params = best_state.params();
  rep.best_jet = jet_from_schur(rep.best_params);
  rep.gap = rep.bound - rep.best;
  rep.evals = evals;
  return rep;
}

}  // namespace t23
