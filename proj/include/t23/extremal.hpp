#pragma once

#include <complex>

#include "t23/bounds.hpp"
#include "t23/coeffs.hpp"
#include "t23/psi.hpp"
#include "t23/series.hpp"

namespace t23 {

/// Truncated expansion of the function attaining the |a3^2 - a4^2| bound.
struct ExtremalFunction {
  Series series;
  PsiTarget psi;

  CoefficientVector coefficients() const { return {series[2], series[3], series[4]}; }
};

/// Solve 1 + z f''(z)/f'(z) = Psi(iz). The driving series is the Maclaurin
/// series of Psi with coefficient n twisted by i^n.
inline ExtremalFunction build_extremal(const PsiTarget& psi, int order = 8) {
  if (order < 4) throw std::invalid_argument("build_extremal: order < 4");
  const Series q = psi.taylor(order);
  Series p(order);
  cplx ipow = 1.0;
  for (int n = 0; n <= order; ++n) {
    p[n] = q[n] * ipow;
    ipow *= cplx(0.0, 1.0);
  }
  return {convex_series_from_p(p), psi};
}

struct AttainmentReport {
  double bound{};
  double attained{};
  double gap{};
};

/// Compare |a3^2 - a4^2| of the extremal function against the closed bound.
inline AttainmentReport verify_attainment(const PsiTarget& psi) {
  const double bound = sharp_bound_t23(psi).bound;
  const double attained = t23_value(build_extremal(psi).coefficients());
  return {bound, attained, bound - attained};
}

}  // namespace t23
