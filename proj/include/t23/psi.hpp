#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "t23/series.hpp"

namespace t23 {

enum class PsiKind { halfplane, order_alpha, strong_beta, custom_jet };

/// Derivative data of a target at the origin: (Psi'(0), Psi''(0), Psi'''(0)).
/// All real: admissible targets have real Maclaurin coefficients.
struct PsiJet {
  double psi1{};
  double psi2{};
  double psi3{};
};

/// A Ma-Minda style target Psi: analytic, univalent, Psi(0) = 1, Re Psi > 0,
/// symmetric about the real axis, Psi(U) starlike with respect to 1.
/// Carries the origin jet always and a disk evaluator when the family has one.
class PsiTarget {
 public:
  /// Psi(z) = (1+z)/(1-z); jet (2, 4, 12).
  static PsiTarget halfplane() {
    PsiTarget t;
    t.kind_ = PsiKind::halfplane;
    t.jet_ = {2.0, 4.0, 12.0};
    t.eval_ = [](cplx z) { return (1.0 + z) / (1.0 - z); };
    return t;
  }

  /// Psi(z) = (1 + (1-2a)z)/(1-z), 0 <= a < 1; jet 2(1-a) * (1, 2, 6).
  static PsiTarget order_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
      throw std::invalid_argument("PsiTarget::order_alpha: alpha outside [0,1)");
    PsiTarget t;
    t.kind_ = PsiKind::order_alpha;
    t.param_ = alpha;
    t.jet_ = {2.0 * (1.0 - alpha), 4.0 * (1.0 - alpha), 12.0 * (1.0 - alpha)};
    t.eval_ = [alpha](cplx z) { return (1.0 + (1.0 - 2.0 * alpha) * z) / (1.0 - z); };
    return t;
  }

  /// Psi(z) = ((1+z)/(1-z))^b, 0 < b <= 1; jet (2b, 4b^2, 4b + 8b^3).
  static PsiTarget strong_beta(double beta) {
    if (!(beta > 0.0 && beta <= 1.0))
      throw std::invalid_argument("PsiTarget::strong_beta: beta outside (0,1]");
    PsiTarget t;
    t.kind_ = PsiKind::strong_beta;
    t.param_ = beta;
    t.jet_ = {2.0 * beta, 4.0 * beta * beta, 4.0 * beta + 8.0 * beta * beta * beta};
    t.eval_ = [beta](cplx z) {
      // (1+z)/(1-z) stays in the right half plane, so the principal log is analytic.
      return std::exp(beta * std::log((1.0 + z) / (1.0 - z)));
    };
    return t;
  }

  /// Jet-only target; bound formulas work, disk-sampling checks need eval.
  static PsiTarget custom(PsiJet jet, std::function<cplx(cplx)> eval = nullptr) {
    PsiTarget t;
    t.kind_ = PsiKind::custom_jet;
    t.jet_ = jet;
    t.eval_ = std::move(eval);
    return t;
  }

  PsiKind kind() const { return kind_; }
  double param() const { return param_; }
  const PsiJet& jet() const { return jet_; }
  bool has_evaluator() const { return static_cast<bool>(eval_); }

  cplx operator()(cplx z) const {
    if (!eval_) throw std::domain_error("PsiTarget: no evaluator for this target");
    return eval_(z);
  }

  /// Maclaurin series of Psi. For the named families every coefficient is
  /// available; a custom jet is zero-padded past z^3.
  Series taylor(int order) const {
    Series s(order);
    s[0] = 1.0;
    switch (kind_) {
      case PsiKind::halfplane:
        for (int n = 1; n <= order; ++n) s[n] = 2.0;
        break;
      case PsiKind::order_alpha:
        for (int n = 1; n <= order; ++n) s[n] = 2.0 * (1.0 - param_);
        break;
      case PsiKind::strong_beta: {
        // beta * log((1+z)/(1-z)) = 2 beta (z + z^3/3 + z^5/5 + ...)
        Series blog(order);
        for (int n = 1; n <= order; n += 2) blog[n] = 2.0 * param_ / static_cast<double>(n);
        s = exp_series(blog);
        break;
      }
      case PsiKind::custom_jet:
        if (order >= 1) s[1] = jet_.psi1;
        if (order >= 2) s[2] = jet_.psi2 / 2.0;
        if (order >= 3) s[3] = jet_.psi3 / 6.0;
        break;
    }
    return s;
  }

  std::string name() const {
    switch (kind_) {
      case PsiKind::halfplane:
        return "halfplane";
      case PsiKind::order_alpha:
        return "alpha:" + format_param();
      case PsiKind::strong_beta:
        return "beta:" + format_param();
      case PsiKind::custom_jet:
        return "custom";
    }
    return "unknown";
  }

 private:
  // Shortest digit string that round-trips to the exact parameter.
  std::string format_param() const {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, param_);
    return std::string(buf, res.ptr);
  }

  PsiKind kind_{PsiKind::custom_jet};
  double param_{0.0};
  PsiJet jet_{};
  std::function<cplx(cplx)> eval_{};
};

struct PropertyCheck {
  bool pass = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  cplx worst_at{};
};

/// Sampled verdict on the target-class requirements. derivative_positive is
/// exact from the jet; the three disk properties are margins over a sample
/// grid (margin > 0 means the property held with room at every sample).
struct AdmissibilityReport {
  int samples = 0;
  bool derivative_positive = false;
  PropertyCheck positive_real;
  PropertyCheck symmetric_axis;
  PropertyCheck starlike_about_one;

  bool all_pass() const {
    return derivative_positive && positive_real.pass && symmetric_axis.pass &&
           starlike_about_one.pass;
  }
};

/// Check Psi'(0) > 0, Re Psi > 0, Psi(conj z) = conj(Psi(z)) and
/// Re[z Psi'(z) / (Psi(z) - 1)] > 0 on a deterministic disk grid.
inline AdmissibilityReport admissibility_report(const PsiTarget& psi, int samples) {
  if (samples < 1) throw std::invalid_argument("admissibility_report: samples < 1");
  if (!psi.has_evaluator())
    throw std::domain_error("admissibility_report: target has no evaluator");

  AdmissibilityReport rep;
  rep.samples = samples;
  rep.derivative_positive = psi.jet().psi1 > 0.0;

  auto note = [](PropertyCheck& chk, double margin, cplx at) {
    if (margin < chk.worst_margin) {
      chk.worst_margin = margin;
      chk.worst_at = at;
    }
    if (margin <= 0.0) chk.pass = false;
  };

  // Golden-angle spiral: radii spread over (0, 0.95], angles equidistributed.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double h = 1e-6;
  for (int k = 0; k < samples; ++k) {
    const double r = 0.95 * (static_cast<double>(k) + 1.0) / static_cast<double>(samples);
    const double theta = golden * static_cast<double>(k);
    const cplx z = std::polar(r, theta);
    const cplx v = psi(z);

    note(rep.positive_real, v.real(), z);

    const double sym = std::abs(psi(std::conj(z)) - std::conj(v));
    note(rep.symmetric_axis, 1e-9 - sym, z);

    if (std::abs(v - 1.0) > 1e-9) {
      const cplx dv = (psi(z + h) - psi(z - h)) / (2.0 * h);
      note(rep.starlike_about_one, (z * dv / (v - 1.0)).real(), z);
    }
  }
  return rep;
}

}  // namespace t23
