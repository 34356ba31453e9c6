#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "t23/rand.hpp"
#include "t23/series.hpp"

namespace t23 {

/// Schur parameters (gamma0, gamma1, gamma2), each in the closed unit disk.
/// They generate the self-map psi0 of the disk through the terminating Schur
/// recursion psi2 = gamma2, psi_j = (gamma_j + z psi_{j+1}) / (1 + conj(gamma_j) z psi_{j+1}),
/// and the Schwarz function omega(z) = z psi0(z).
struct SchurParams {
  std::array<cplx, 3> gamma{};
};

/// First three Maclaurin coefficients of a Schwarz function
/// omega(z) = c1 z + c2 z^2 + c3 z^3 + ... with omega(0) = 0, |omega| < 1.
struct SchwarzJet {
  cplx c1{};
  cplx c2{};
  cplx c3{};
  std::optional<SchurParams> source{};
};

/// Closed-form jet of omega(z) = z psi0(z) for the given Schur parameters.
/// If |gamma0| = 1 the tail is ignored: omega is the rotation gamma0 z.
inline SchwarzJet jet_from_schur(const SchurParams& p) {
  const cplx g0 = p.gamma[0];
  const cplx g1 = p.gamma[1];
  const cplx g2 = p.gamma[2];
  SchwarzJet jet;
  jet.c1 = g0;
  if (std::norm(g0) == 1.0) {
    jet.c2 = 0.0;
    jet.c3 = 0.0;
  } else {
    const double t0 = 1.0 - std::norm(g0);
    jet.c2 = t0 * g1;
    jet.c3 = t0 * (g2 * (1.0 - std::norm(g1)) - std::conj(g0) * g1 * g1);
  }
  jet.source = p;
  return jet;
}

/// Truncated series of omega(z) = z psi0(z), expanding the Schur recursion
/// with series arithmetic. This is the mechanical route the closed forms of
/// jet_from_schur are checked against.
inline Series schur_omega_series(const SchurParams& p, int order) {
  Series psi = Series::constant(p.gamma[2], order);
  for (int j = 1; j >= 0; --j) {
    const cplx g = p.gamma[static_cast<size_t>(j)];
    const Series zpsi = Series::identity(order) * psi;
    const Series num = Series::constant(g, order) + zpsi;
    const Series den = Series::constant(1.0, order) + std::conj(g) * zpsi;
    psi = num * den.reciprocal();
  }
  return Series::identity(order) * psi;
}

/// One jet drawn uniformly (each gamma_j uniform on the closed disk),
/// a pure function of (seed, index).
inline SchwarzJet sample_schwarz_jet(uint64_t seed, uint64_t index) {
  std::mt19937_64 rng = make_rng(seed, index);
  SchurParams p;
  for (auto& g : p.gamma) g = uniform_disk(rng);
  return jet_from_schur(p);
}

inline std::vector<SchwarzJet> sample_schwarz_jets(uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("sample_schwarz_jets: count < 1");
  std::vector<SchwarzJet> jets;
  jets.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) jets.push_back(sample_schwarz_jet(seed, static_cast<uint64_t>(i)));
  return jets;
}

/// |c2 + lambda c1^2|, bounded by max{1, |lambda|} over Schwarz jets.
inline double lemma1_functional(const SchwarzJet& jet, cplx lambda) {
  return std::abs(jet.c2 + lambda * jet.c1 * jet.c1);
}

/// |c3 + nu1 c1 c2 + nu2 c1^3|; nu2 enters bounds as a real parameter.
inline double lemma2_functional(const SchwarzJet& jet, cplx nu1, double nu2) {
  return std::abs(jet.c3 + nu1 * jet.c1 * jet.c2 + nu2 * jet.c1 * jet.c1 * jet.c1);
}

}  // namespace t23
