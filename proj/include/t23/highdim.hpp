#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "t23/bounds.hpp"
#include "t23/coeffs.hpp"
#include "t23/psi.hpp"
#include "t23/rand.hpp"
#include "t23/schwarz.hpp"
#include "t23/series.hpp"

namespace t23 {

enum class Norm { l2, linf };

using Vec = std::vector<cplx>;

inline double norm_of(Norm norm, const Vec& z) {
  double acc = 0.0;
  for (const cplx& c : z)
    acc = (norm == Norm::l2) ? acc + std::norm(c) : std::max(acc, std::abs(c));
  return norm == Norm::l2 ? std::sqrt(acc) : acc;
}

/// Index of the strictly largest |z_k|; the sup-norm functional is only
/// defined where the maximum is unique.
inline int max_coordinate(const Vec& z) {
  if (z.empty()) throw std::invalid_argument("max_coordinate: empty vector");
  int arg = 0;
  double best = std::abs(z[0]), second = -1.0;
  for (int k = 1; k < static_cast<int>(z.size()); ++k) {
    const double m = std::abs(z[static_cast<size_t>(k)]);
    if (m > best) {
      second = best;
      best = m;
      arg = k;
    } else {
      second = std::max(second, m);
    }
  }
  if (best == 0.0) throw std::invalid_argument("max_coordinate: zero vector");
  if (second >= 0.0 && best - second <= 1e-12 * best)
    throw std::domain_error("max_coordinate: max coordinate is not unique");
  return arg;
}

/// Unit-norm supporting functional at z, applied to w:
///   l2:   <w, z> / ||z||_2 (conjugate-linear in z's entries)
///   linf: w_k conj(z_k) / |z_k| at the unique max coordinate k
/// Both satisfy l_z(z) = ||z|| and |l_z(w)| <= ||w||.
inline cplx functional_lz(Norm norm, const Vec& z, const Vec& w) {
  if (z.size() != w.size()) throw std::invalid_argument("functional_lz: size mismatch");
  if (z.empty()) throw std::invalid_argument("functional_lz: empty vector");
  if (norm == Norm::l2) {
    const double nz = norm_of(Norm::l2, z);
    if (nz == 0.0) throw std::invalid_argument("functional_lz: zero base point");
    cplx acc = 0.0;
    for (size_t k = 0; k < z.size(); ++k) acc += w[k] * std::conj(z[k]);
    return acc / nz;
  }
  const int k = max_coordinate(z);
  const cplx zk = z[static_cast<size_t>(k)];
  return w[static_cast<size_t>(k)] * std::conj(zk) / std::abs(zk);
}

/// Mapping F(z) = z f(z) with scalar part f(z) = phi(l(z)), where l is a
/// fixed unit functional and phi solves a one-variable coefficient problem:
///   extremal_ball / extremal_polydisk: z phi(z) solves 1 + z G''/G' = Psi(iz),
///     built through exp(integral of (Psi(it)-1)/t);
///   schwarz_seed: z phi(z) solves 1 + z G''/G' = 1 + s (Psi(omega(z)) - 1)
///     for the Schur-parameterized omega. deviation_scale s = 1 is the class
///     member; s != 1 deliberately leaves the class (negative controls).
struct SeedMapping {
  enum class Kind { extremal_ball, extremal_polydisk, schwarz_seed };

  Kind kind{};
  Norm norm{};
  int dim = 0;
  PsiTarget psi;
  Vec u{};
  SchurParams params{};
  double deviation_scale = 1.0;

  static SeedMapping extremal_ball(const PsiTarget& psi, Vec direction) {
    SeedMapping m;
    m.kind = Kind::extremal_ball;
    m.norm = Norm::l2;
    m.dim = static_cast<int>(direction.size());
    m.psi = psi;
    m.u = normalize(Norm::l2, std::move(direction));
    return m;
  }

  static SeedMapping extremal_polydisk(const PsiTarget& psi, int n) {
    if (n < 1) throw std::invalid_argument("SeedMapping: dimension < 1");
    SeedMapping m;
    m.kind = Kind::extremal_polydisk;
    m.norm = Norm::linf;
    m.dim = n;
    m.psi = psi;
    m.u = Vec(static_cast<size_t>(n), cplx(0.0));
    m.u[0] = 1.0;
    return m;
  }

  static SeedMapping schwarz_seed(const PsiTarget& psi, const SchurParams& params, Vec direction,
                                  Norm norm, double deviation_scale = 1.0) {
    SeedMapping m;
    m.kind = Kind::schwarz_seed;
    m.norm = norm;
    m.dim = static_cast<int>(direction.size());
    m.psi = psi;
    m.u = normalize(norm, std::move(direction));
    m.params = params;
    m.deviation_scale = deviation_scale;
    return m;
  }

 private:
  static Vec normalize(Norm norm, Vec v) {
    const double n = norm_of(norm, v);
    if (n == 0.0) throw std::invalid_argument("SeedMapping: zero direction");
    if (norm == Norm::linf) (void)max_coordinate(v);
    for (auto& c : v) c /= n;
    return v;
  }

  SeedMapping() : psi(PsiTarget::custom({1.0, 0.0, 0.0})) {}
};

/// Scalar argument w = l(z) the seed feeds into phi. |w| <= ||z||.
inline cplx seed_functional(const SeedMapping& m, const Vec& z) {
  if (static_cast<int>(z.size()) != m.dim)
    throw std::invalid_argument("seed_functional: dimension mismatch");
  if (m.kind == SeedMapping::Kind::extremal_polydisk) return z[0];
  return functional_lz(m.norm, m.u, z);
}

/// Scalar series phi (phi(0) = 1) of the seed, to the requested order.
inline Series seed_phi_series(const SeedMapping& m, int order) {
  if (order < 0) throw std::invalid_argument("seed_phi_series: negative order");
  Series g(order + 1);
  if (m.kind == SeedMapping::Kind::schwarz_seed) {
    const Series omega = schur_omega_series(m.params, order + 1);
    Series p = m.psi.taylor(order + 1).compose(omega);
    if (m.deviation_scale != 1.0) {
      p = m.deviation_scale * p;
      p[0] += 1.0 - m.deviation_scale;
    }
    g = convex_series_from_p(p);
  } else {
    // (Psi(it) - 1)/t, then G' = exp of its antiderivative, then G.
    const Series q = m.psi.taylor(order + 1);
    Series rate(order);
    cplx ipow(0.0, 1.0);
    for (int n = 0; n <= order; ++n) {
      rate[n] = q[n + 1] * ipow;
      ipow *= cplx(0.0, 1.0);
    }
    g = exp_series(rate.integrate0()).integrate0();
  }
  Series phi(order);
  for (int k = 0; k <= order; ++k) phi[k] = g[k + 1];
  return phi;
}

/// Jet of the direction-restricted scalar map zeta -> f(zeta z).
struct DirectionalJet {
  Vec direction{};
  Series fjet{0};
};

inline constexpr int kMaxJetOrder = 8;

inline DirectionalJet directional_jet(const SeedMapping& m, const Vec& z, int order) {
  if (order > kMaxJetOrder) throw std::invalid_argument("directional_jet: order > series capacity");
  const cplx w = seed_functional(m, z);
  const Series phi = seed_phi_series(m, order);
  DirectionalJet jet{z, Series(order)};
  cplx wpow = 1.0;
  for (int k = 0; k <= order; ++k) {
    jet.fjet[k] = phi[k] * wpow;
    wpow *= w;
  }
  return jet;
}

/// A3 = l_z(D^3F(0)(z^3)) / (3! ||z||^3), A4 = l_z(D^4F(0)(z^4)) / (4! ||z||^4)
/// for F(z) = z f(z): D^kF(0)(z^k)/k! is the vector z times jet coefficient k-1.
struct T41Functionals {
  cplx A3{};
  cplx A4{};
};

inline T41Functionals t41_functionals(const SeedMapping& m, const Vec& z) {
  const double nz = norm_of(m.norm, z);
  if (nz == 0.0) throw std::invalid_argument("t41_functionals: z = 0");
  const Series fjet = directional_jet(m, z, 3).fjet;

  Vec v3(z.size()), v4(z.size());
  for (size_t k = 0; k < z.size(); ++k) {
    v3[k] = 6.0 * fjet[2] * z[k];
    v4[k] = 24.0 * fjet[3] * z[k];
  }
  T41Functionals out;
  out.A3 = functional_lz(m.norm, z, v3) / (6.0 * nz * nz * nz);
  out.A4 = functional_lz(m.norm, z, v4) / (24.0 * nz * nz * nz * nz);
  return out;
}

struct CheckResult {
  double lhs{};
  double rhs{};
  bool holds{};
};

inline constexpr double kOperatorCheckTol = 1e-9;

/// |A3^2 - A4^2| against the one-variable sharp bound.
inline CheckResult t41_check(const SeedMapping& m, const Vec& z) {
  const T41Functionals f = t41_functionals(m, z);
  CheckResult res;
  res.lhs = std::abs(f.A3 * f.A3 - f.A4 * f.A4);
  res.rhs = sharp_bound_t23(m.psi).bound;
  res.holds = res.lhs <= res.rhs + kOperatorCheckTol;
  return res;
}

/// Sup-norm inequality on the polydisk:
///   lhs = max_k | (1/4!) D^4F_k(0)(z^3, D^4F(0)(z^4)/4!)
///               - (1/3!) D^3F_k(0)(z^2, D^3F(0)(z^3)/3!) |
///   rhs = ||z||^7/576 (psi1^3 + (3/2) psi1 psi2 + psi3/3)^2
///       + ||z||^5 psi1^2/36 (psi2/(2 psi1) + psi1)^2
/// The repeated-slot multilinear forms collapse through F = z f(z): the inner
/// vectors are parallel to z, leaving per-component z_k (b3^2 - b2^2).
inline CheckResult t42_sides(const SeedMapping& m, const Vec& z) {
  if (m.norm != Norm::linf) throw std::invalid_argument("t42_sides: polydisk norm required");
  const double nz = norm_of(m.norm, z);
  if (nz == 0.0) throw std::invalid_argument("t42_sides: z = 0");
  (void)max_coordinate(z);

  const Series fjet = directional_jet(m, z, 3).fjet;
  const cplx b2 = fjet[2], b3 = fjet[3];

  double lhs = 0.0;
  for (const cplx& zk : z) lhs = std::max(lhs, std::abs(zk * (b3 * b3 - b2 * b2)));

  const auto [psi1, psi2, psi3] = m.psi.jet();
  if (psi1 == 0.0) throw std::domain_error("t42_sides: psi1 = 0");
  const double cubic = psi1 * psi1 * psi1 + 1.5 * psi1 * psi2 + psi3 / 3.0;
  const double quad = psi2 / (2.0 * psi1) + psi1;
  const double n5 = std::pow(nz, 5), n7 = std::pow(nz, 7);

  CheckResult res;
  res.lhs = lhs;
  res.rhs = n7 / 576.0 * cubic * cubic + n5 * psi1 * psi1 / 36.0 * quad * quad;
  res.holds = res.lhs <= res.rhs + kOperatorCheckTol;
  return res;
}

/// Random point of the domain with rmin <= ||z|| <= rmax; for the sup norm
/// the max coordinate is unique by construction.
inline Vec sample_domain_point(Norm norm, int dim, std::mt19937_64& rng, double rmin = 0.05,
                               double rmax = 0.9) {
  std::uniform_real_distribution<double> radius(rmin, rmax);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Vec z(static_cast<size_t>(dim));
    if (norm == Norm::l2) {
      for (auto& c : z) c = cplx(gauss(rng), gauss(rng));
    } else {
      for (auto& c : z) c = uniform_disk(rng);
    }
    const double n = norm_of(norm, z);
    if (n < 1e-9) continue;
    const double r = radius(rng);
    for (auto& c : z) c *= r / n;
    if (norm == Norm::linf) {
      try {
        (void)max_coordinate(z);
      } catch (const std::domain_error&) {
        continue;
      }
    }
    return z;
  }
}

inline Vec sample_unit_direction(Norm norm, int dim, std::mt19937_64& rng) {
  Vec u = sample_domain_point(norm, dim, rng, 0.5, 0.9);
  const double n = norm_of(norm, u);
  for (auto& c : u) c /= n;
  return u;
}

namespace detail {

/// Sampled image boundary Psi(r e^{i theta}) used for point-in-image tests.
struct ImageBoundary {
  std::vector<cplx> pts;

  static ImageBoundary make(const PsiTarget& psi, double radius = 0.995, int count = 8192) {
    ImageBoundary b;
    b.pts.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / count;
      b.pts.push_back(psi(std::polar(radius, theta)));
    }
    return b;
  }

  /// Winding number of the curve around v (0 or 1 for a univalent image)
  /// and the distance from v to the sampled curve.
  std::pair<int, double> locate(cplx v) const {
    double angle = 0.0;
    double dist = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < pts.size(); ++j) {
      const cplx a = pts[j] - v;
      const cplx b = pts[(j + 1) % pts.size()] - v;
      angle += std::arg(b / a);
      dist = std::min(dist, std::abs(a));
    }
    const int winding = static_cast<int>(std::lround(angle / (2.0 * std::numbers::pi)));
    return {winding, dist};
  }
};

}  // namespace detail

struct MembershipReport {
  int samples = 0;
  int violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
};

/// Sample the defining scalar of the class condition,
///   (D^2 f(z)(z^2) + 3 Df(z)(z) + f(z)) / (f(z) + Df(z)(z)),
/// over random domain points and test that its values stay inside Psi's
/// image (winding-number test against the sampled image boundary). For
/// f = phi(l(z)) the scalar is a function of the direction-restricted jet:
/// with b(zeta) = phi(zeta w), numerator coefficients are (k+1)^2 b_k and
/// denominator coefficients (k+1) b_k, evaluated at zeta = 1.
inline MembershipReport mpsi_sample_check(const SeedMapping& m, int samples, uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("mpsi_sample_check: samples < 1");
  if (!m.psi.has_evaluator())
    throw std::domain_error("mpsi_sample_check: target has no evaluator");

  // Tail of the jet at ||z|| <= 0.9: 0.9^384 ~ 3e-18, well under the margins.
  const int ord = 384;
  const Series phi = seed_phi_series(m, ord);
  const auto boundary = detail::ImageBoundary::make(m.psi);

  MembershipReport rep;
  rep.samples = samples;
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng = make_rng(seed, static_cast<uint64_t>(i));
    const Vec z = sample_domain_point(m.norm, m.dim, rng);
    const cplx w = seed_functional(m, z);

    Series num(ord), den(ord);
    cplx wpow = 1.0;
    for (int k = 0; k <= ord; ++k) {
      const cplx bk = phi[k] * wpow;
      num[k] = static_cast<double>((k + 1) * (k + 1)) * bk;
      den[k] = static_cast<double>(k + 1) * bk;
      wpow *= w;
    }
    // den(1) = G'(w), nonzero for every seed this type can build.
    const cplx value = num.eval(1.0) / den.eval(1.0);

    const auto [winding, dist] = boundary.locate(value);
    const double margin = winding == 1 ? dist : -dist;
    if (winding != 1) ++rep.violations;
    rep.worst_margin = std::min(rep.worst_margin, margin);
  }
  return rep;
}

}  // namespace t23
