#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "t23/psi.hpp"
#include "t23/schwarz.hpp"
#include "t23/series.hpp"

namespace t23 {

/// Coefficients (a2, a3, a4) of f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...
struct CoefficientVector {
  cplx a2{};
  cplx a3{};
  cplx a4{};
};

/// Solve 1 + z f''(z)/f'(z) = p(z) for the normalized f (a0 = 0, a1 = 1).
/// Matching coefficients gives n(n-1) a_n = sum_{k=1}^{n-1} k a_k p_{n-k}.
inline Series convex_series_from_p(const Series& p) {
  const int order = p.order();
  if (order < 1) throw std::invalid_argument("convex_series_from_p: order < 1");
  // a_n depends on p_1..p_{n-1} only, so p of order N determines f through
  // a_{N+1}.
  Series f(order + 1);
  f[1] = 1.0;
  for (int n = 2; n <= order + 1; ++n) {
    cplx acc = 0.0;
    for (int k = 1; k < n; ++k) acc += static_cast<double>(k) * f[k] * p[n - k];
    f[n] = acc / static_cast<double>(n * (n - 1));
  }
  return f;
}

/// p(z) = Psi(omega(z)) through cubic order for a jet-only omega:
/// p1 = psi1 c1, p2 = psi1 c2 + psi2 c1^2 / 2,
/// p3 = psi1 c3 + psi2 c1 c2 + psi3 c1^3 / 6.
inline Series caratheodory_from_jets(const PsiTarget& psi, const SchwarzJet& w) {
  const auto [psi1, psi2, psi3] = psi.jet();
  Series p(3);
  p[0] = 1.0;
  p[1] = psi1 * w.c1;
  p[2] = psi1 * w.c2 + 0.5 * psi2 * w.c1 * w.c1;
  p[3] = psi1 * w.c3 + psi2 * w.c1 * w.c2 + psi3 * w.c1 * w.c1 * w.c1 / 6.0;
  return p;
}

/// (a2, a3, a4) of the solution of 1 + z f''/f' = Psi(omega(z)) by the
/// coefficient recurrence. Closed forms below are the independent route.
inline CoefficientVector coeffs_from_subordination(const PsiTarget& psi, const SchwarzJet& w) {
  const Series f = convex_series_from_p(caratheodory_from_jets(psi, w));
  return {f[2], f[3], f[4]};
}

/// a3 = (psi1/6) (c2 + (psi1 + psi2/(2 psi1)) c1^2).
inline cplx a3_closed_form(const PsiTarget& psi, const SchwarzJet& w) {
  const auto [psi1, psi2, psi3] = psi.jet();
  if (psi1 == 0.0) throw std::domain_error("a3_closed_form: psi1 = 0");
  return psi1 / 6.0 * (w.c2 + (psi1 + psi2 / (2.0 * psi1)) * w.c1 * w.c1);
}

/// a4 = (psi1/12) (c3 + r1 c1 c2 + r2 c1^3) with (r1, r2) from r_params.
inline cplx a4_closed_form(const PsiTarget& psi, const SchwarzJet& w) {
  const auto [psi1, psi2, psi3] = psi.jet();
  if (psi1 == 0.0) throw std::domain_error("a4_closed_form: psi1 = 0");
  const double r1 = (3.0 * psi1 * psi1 + 2.0 * psi2) / (2.0 * psi1);
  const double r2 = (6.0 * psi1 * psi1 * psi1 + 9.0 * psi1 * psi2 + 2.0 * psi3) / (12.0 * psi1);
  return psi1 / 12.0 * (w.c3 + r1 * w.c1 * w.c2 + r2 * w.c1 * w.c1 * w.c1);
}

namespace detail {

/// LU with partial pivoting over the m x m symmetric Toeplitz matrix whose
/// first row is (a_n, ..., a_{n+m-1}).
inline cplx toeplitz_det_lu(std::span<const cplx> coeffs, int m, int n) {
  auto a = [&](int idx) { return coeffs[static_cast<size_t>(idx - 1)]; };
  std::vector<std::vector<cplx>> mat(static_cast<size_t>(m), std::vector<cplx>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(n + std::abs(i - j));

  cplx det = 1.0;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int row = col + 1; row < m; ++row)
      if (std::abs(mat[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
          std::abs(mat[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
        pivot = row;
    if (mat[static_cast<size_t>(pivot)][static_cast<size_t>(col)] == cplx(0.0)) return 0.0;
    if (pivot != col) {
      std::swap(mat[static_cast<size_t>(pivot)], mat[static_cast<size_t>(col)]);
      det = -det;
    }
    det *= mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int row = col + 1; row < m; ++row) {
      const cplx factor = mat[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                          mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
      for (int j = col; j < m; ++j)
        mat[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
            factor * mat[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of the m x m symmetric Toeplitz matrix with first row
/// (a_n, ..., a_{n+m-1}). coeffs holds (a1, a2, ...), so index k is a_{k+1}.
/// Expanded directly for m <= 3, by LU with partial pivoting above that.
inline cplx toeplitz_det(std::span<const cplx> coeffs, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("toeplitz_det: m, n must be >= 1");
  if (static_cast<size_t>(n + m - 1) > coeffs.size())
    throw std::invalid_argument("toeplitz_det: insufficient coefficients");
  auto a = [&](int idx) { return coeffs[static_cast<size_t>(idx - 1)]; };

  if (m == 1) return a(n);
  if (m == 2) {
    const cplx x = a(n), y = a(n + 1);
    return x * x - y * y;
  }
  if (m == 3) {
    const cplx x = a(n), y = a(n + 1), w = a(n + 2);
    return x * x * x - 2.0 * x * y * y + 2.0 * y * y * w - x * w * w;
  }
  return detail::toeplitz_det_lu(coeffs, m, n);
}

inline cplx toeplitz_det(std::initializer_list<cplx> coeffs, int m, int n) {
  return toeplitz_det(std::span<const cplx>(coeffs.begin(), coeffs.size()), m, n);
}

/// |a3^2 - a4^2|, the modulus of det [[a3, a4], [a4, a3]].
inline double t23_value(const CoefficientVector& c) {
  return std::abs(c.a3 * c.a3 - c.a4 * c.a4);
}

}  // namespace t23
