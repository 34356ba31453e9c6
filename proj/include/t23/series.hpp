#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace t23 {

using cplx = std::complex<double>;

/// Truncated complex power series a0 + a1 z + ... + aN z^N, N = order().
///
/// Values are immutable after construction through the arithmetic API; every
/// operation returns a fresh series. Binary operations truncate to the
/// smaller operand order: coefficients beyond the shorter operand are not
/// determined by the inputs, so keeping them would fabricate information.
class Series {
 public:
  /// Zero series of the given order (order+1 stored coefficients).
  explicit Series(int order) : c_(static_cast<size_t>(check_order(order)) + 1) {}

  /// Series from explicit coefficients (a0, a1, ...); order = size - 1.
  explicit Series(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
  }

  Series(std::initializer_list<cplx> coeffs) : Series(std::vector<cplx>(coeffs)) {}

  static Series constant(cplx value, int order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }

  /// The identity series z (requires order >= 1).
  static Series identity(int order) {
    if (order < 1) throw std::invalid_argument("Series::identity: order < 1");
    Series s(order);
    s.c_[1] = 1.0;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  cplx operator[](int n) const { return c_.at(static_cast<size_t>(n)); }
  cplx& operator[](int n) { return c_.at(static_cast<size_t>(n)); }

  std::span<const cplx> coeffs() const { return c_; }

  /// Coefficient a_n, reading 0 beyond the truncation order.
  cplx coeff_or_zero(int n) const {
    return (n >= 0 && n <= order()) ? c_[static_cast<size_t>(n)] : cplx(0.0);
  }

  /// Horner evaluation of the truncated polynomial at x.
  cplx eval(cplx x) const {
    cplx acc = c_.back();
    for (size_t k = c_.size() - 1; k > 0; --k) acc = acc * x + c_[k - 1];
    return acc;
  }

  /// Copy truncated (or zero-extended) to the given order.
  Series truncated(int new_order) const {
    Series out(new_order);
    const int n = std::min(new_order, order());
    for (int k = 0; k <= n; ++k) out.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
    return out;
  }

  /// Cauchy product truncated to min(order a, order b).
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) {
      cplx acc = 0.0;
      for (int k = 0; k <= n; ++k) acc += a[k] * b[n - k];
      out[n] = acc;
    }
    return out;
  }

  friend Series operator*(cplx s, const Series& a) {
    Series out = a;
    for (auto& c : out.c_) c *= s;
    return out;
  }

  friend Series operator*(const Series& a, cplx s) { return s * a; }

  /// Termwise derivative; the result is determined one order lower.
  Series derivative() const {
    Series out(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k) out[k - 1] = static_cast<double>(k) * c_[static_cast<size_t>(k)];
    if (order() == 0) out[0] = 0.0;
    return out;
  }

  /// Antiderivative with zero constant term; gains one order (the input
  /// determines the integral through z^(order+1)).
  Series integrate0() const {
    Series out(order() + 1);
    for (int k = 0; k <= order(); ++k)
      out[k + 1] = c_[static_cast<size_t>(k)] / static_cast<double>(k + 1);
    return out;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  Series reciprocal() const {
    if (c_[0] == cplx(0.0)) throw std::domain_error("Series::reciprocal: zero constant term");
    Series out(order());
    out[0] = 1.0 / c_[0];
    for (int n = 1; n <= order(); ++n) {
      cplx acc = 0.0;
      for (int k = 1; k <= n; ++k) acc += c_[static_cast<size_t>(k)] * out[n - k];
      out[n] = -acc / c_[0];
    }
    return out;
  }

  /// Composition this(inner); inner must annihilate the constant term, else
  /// the truncated composition is not determined by finitely many inputs.
  Series compose(const Series& inner) const {
    if (std::abs(inner[0]) > 1e-14)
      throw std::invalid_argument("Series::compose: inner constant term must be 0");
    const int n = std::min(order(), inner.order());
    Series acc = Series::constant(c_[static_cast<size_t>(order())], n);
    for (int k = order() - 1; k >= 0; --k) {
      acc = acc * inner;
      acc[0] += c_[static_cast<size_t>(k)];
    }
    return acc;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    return order;
  }

  std::vector<cplx> c_;
};

/// exp of a series with zero constant term (callers shift exp(a0) out first).
/// Uses E' = a'E: n E_n = sum_{k=1..n} k a_k E_{n-k}.
inline Series exp_series(const Series& a) {
  if (std::abs(a[0]) > 1e-14)
    throw std::invalid_argument("exp_series: constant term must be 0");
  Series out(a.order());
  out[0] = 1.0;
  for (int n = 1; n <= a.order(); ++n) {
    cplx acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * out[n - k];
    out[n] = acc / static_cast<double>(n);
  }
  return out;
}

/// Max coefficient deviation over the shared truncation range.
inline double max_coeff_distance(const Series& a, const Series& b) {
  double worst = 0.0;
  for (int k = 0; k <= std::min(a.order(), b.order()); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace t23
