#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gwmirror/bigrat.hpp"
#include "gwmirror/cohclass.hpp"
#include "gwmirror/errors.hpp"

namespace gwmirror {

/// Power series in the curve degree d, truncated after index dmax.
///
/// Index d stands for the monomial q^(step*d): the quintic lives in q^5 and the
/// plane cubic in q^3, so the sums over d are dense sequences here. The
/// coefficient type C is either BigRat or CohClass; all CohClass coefficients of
/// one series share a ring_len.
///
/// Every operation truncates at dmax. Operands of a binary operation must agree
/// on dmax, step, and coefficient ring.
template <class C>
class DSeries {
 public:
  DSeries(std::size_t dmax, unsigned step, const C& zero)
      : step_(step), coeffs_(dmax + 1, zero_like(zero)) {
    if (step == 0) throw UsageError("DSeries: step must be positive");
  }

  DSeries(unsigned step, std::vector<C> coeffs) : step_(step), coeffs_(std::move(coeffs)) {
    if (step == 0) throw UsageError("DSeries: step must be positive");
    if (coeffs_.empty()) throw UsageError("DSeries: need at least one coefficient");
    for (const C& c : coeffs_) {
      if (!same_ring(c, coeffs_.front())) {
        throw UsageError("DSeries: coefficients from different rings");
      }
    }
  }

  static DSeries constant(const C& value, std::size_t dmax, unsigned step) {
    DSeries s(dmax, step, value);
    s.coeffs_[0] = value;
    return s;
  }

  /// value * q^(step*degree); zero if degree > dmax.
  static DSeries monomial(const C& value, std::size_t degree, std::size_t dmax, unsigned step) {
    DSeries s(dmax, step, value);
    if (degree <= dmax) s.coeffs_[degree] = value;
    return s;
  }

  std::size_t dmax() const { return coeffs_.size() - 1; }
  unsigned step() const { return step_; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  const C& operator[](std::size_t d) const { return coeffs_.at(d); }
  const C& coeff(std::size_t d) const { return coeffs_.at(d); }
  void set(std::size_t d, C value) {
    if (!same_ring(value, coeffs_.front())) throw UsageError("DSeries::set: ring mismatch");
    coeffs_.at(d) = std::move(value);
  }

  C zero_coeff() const { return zero_like(coeffs_.front()); }
  C one_coeff() const { return one_like(coeffs_.front()); }

  void check_shape(const DSeries& o, const char* op) const {
    if (o.dmax() != dmax() || o.step_ != step_ || !same_ring(o.coeffs_.front(), coeffs_.front())) {
      throw UsageError(std::string("DSeries ") + op + ": shape mismatch (dmax " +
                       std::to_string(dmax()) + "/" + std::to_string(o.dmax()) + ", step " +
                       std::to_string(step_) + "/" + std::to_string(o.step_) + ")");
    }
  }

  DSeries& operator+=(const DSeries& o) {
    check_shape(o, "+");
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
  }
  DSeries& operator-=(const DSeries& o) {
    check_shape(o, "-");
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
  }
  DSeries& operator*=(const BigRat& s) {
    for (C& c : coeffs_) c *= s;
    return *this;
  }

  friend DSeries operator+(DSeries a, const DSeries& b) { return a += b; }
  friend DSeries operator-(DSeries a, const DSeries& b) { return a -= b; }
  friend DSeries operator*(DSeries a, const BigRat& s) { return a *= s; }
  friend DSeries operator*(const BigRat& s, DSeries a) { return a *= s; }
  friend DSeries operator-(DSeries a) { return a *= BigRat(-1); }

  /// Cauchy product.
  friend DSeries operator*(const DSeries& a, const DSeries& b) {
    a.check_shape(b, "*");
    DSeries out(a.dmax(), a.step_, a.coeffs_.front());
    for (std::size_t i = 0; i <= a.dmax(); ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= a.dmax(); ++j) {
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const DSeries& a, const DSeries& b) {
    return a.step_ == b.step_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const DSeries& s) {
    os << "[";
    for (std::size_t d = 0; d < s.coeffs_.size(); ++d) {
      if (d != 0) os << ", ";
      os << s.coeffs_[d];
    }
    return os << "] (step " << s.step_ << ")";
  }

 private:
  static bool is_zero_coeff(const C& c) { return c.is_zero(); }

  unsigned step_;
  std::vector<C> coeffs_;
};

using ScalarSeries = DSeries<BigRat>;
using CohSeries = DSeries<CohClass>;

/// Coefficientwise product of a series with a scalar series: (a * s)_e = sum a_d s_(e-d).
template <class C>
DSeries<C> scale_by(const DSeries<C>& a, const ScalarSeries& s) {
  if (a.dmax() != s.dmax() || a.step() != s.step()) {
    throw UsageError("scale_by: shape mismatch");
  }
  DSeries<C> out(a.dmax(), a.step(), a.coeff(0));
  for (std::size_t i = 0; i <= a.dmax(); ++i) {
    for (std::size_t j = 0; i + j <= a.dmax(); ++j) {
      if (s[j].is_zero()) continue;
      C term = a[i];
      term *= s[j];
      out.set(i + j, out[i + j] + term);
    }
  }
  return out;
}

/// Multiplicative inverse; the constant coefficient must be a unit.
template <class C>
DSeries<C> inverse(const DSeries<C>& a) {
  if (!is_unit(a[0])) throw DomainError("series inverse: constant term is not a unit");
  const C inv0 = inverse(a[0]);
  DSeries<C> b(a.dmax(), a.step(), a[0]);
  b.set(0, inv0);
  for (std::size_t e = 1; e <= a.dmax(); ++e) {
    C acc = a.zero_coeff();
    for (std::size_t k = 1; k <= e; ++k) acc += a[k] * b[e - k];
    b.set(e, -(acc * inv0));
  }
  return b;
}

/// exp(a). The constant term must be nilpotent (zero for scalars); it is split off
/// and exponentiated in the coefficient ring.
template <class C>
DSeries<C> exp(const DSeries<C>& a) {
  if (!is_nilpotent(a[0])) throw DomainError("series exp: constant term is not nilpotent");
  // b' = a' b on the zero-constant part: e*b_e = sum_{k=1..e} k a_k b_(e-k).
  DSeries<C> b(a.dmax(), a.step(), a[0]);
  b.set(0, a.one_coeff());
  for (std::size_t e = 1; e <= a.dmax(); ++e) {
    C acc = a.zero_coeff();
    for (std::size_t k = 1; k <= e; ++k) {
      acc += a[k] * b[e - k] * BigRat(static_cast<long>(k));
    }
    b.set(e, acc * BigRat(1, static_cast<long>(e)));
  }
  if (!a[0].is_zero()) {
    const C factor = exp_nilpotent(a[0]);
    for (std::size_t e = 0; e <= a.dmax(); ++e) b.set(e, b[e] * factor);
  }
  return b;
}

/// log(a). The constant term must be 1 (or 1 + nilpotent).
template <class C>
DSeries<C> log(const DSeries<C>& a) {
  if (!is_unipotent(a[0])) throw DomainError("series log: constant term is not 1 + nilpotent");
  const C inv0 = inverse(a[0]);
  std::vector<C> c;
  c.reserve(a.dmax() + 1);
  for (std::size_t e = 0; e <= a.dmax(); ++e) c.push_back(a[e] * inv0);
  // L' c = c' with c_0 = 1: e L_e = e c_e - sum_{k=1..e-1} k L_k c_(e-k).
  DSeries<C> L(a.dmax(), a.step(), a[0]);
  L.set(0, log_unipotent(a[0]));
  for (std::size_t e = 1; e <= a.dmax(); ++e) {
    C acc = c[e] * BigRat(static_cast<long>(e));
    for (std::size_t k = 1; k < e; ++k) acc -= L[k] * c[e - k] * BigRat(static_cast<long>(k));
    L.set(e, acc * BigRat(1, static_cast<long>(e)));
  }
  return L;
}

/// a(q * exp(g(q))): the index-d coefficient a_d becomes a_d * exp(d*g) shifted by d.
/// g is a scalar series with zero constant term, per unit of the index variable.
template <class C>
DSeries<C> substitute(const DSeries<C>& a, const ScalarSeries& g) {
  if (a.dmax() != g.dmax() || a.step() != g.step()) {
    throw UsageError("substitute: shape mismatch");
  }
  if (!g[0].is_zero()) throw DomainError("substitute: g has nonzero constant term");
  const ScalarSeries eg = exp(g);
  ScalarSeries power = ScalarSeries::constant(BigRat(1), g.dmax(), g.step());
  DSeries<C> out(a.dmax(), a.step(), a[0]);
  for (std::size_t d = 0; d <= a.dmax(); ++d) {
    if (d != 0) power = power * eg;
    if (a[d].is_zero()) continue;
    for (std::size_t j = 0; d + j <= a.dmax(); ++j) {
      if (power[j].is_zero()) continue;
      C term = a[d];
      term *= power[j];
      out.set(d + j, out[d + j] + term);
    }
  }
  return out;
}

/// Inverts the change of variables qt = q * exp(g(q)). Returns h with zero
/// constant term such that q = qt * exp(h(qt)), found by the fixed-point
/// iteration h <- -g(qt * exp(h)), one order per pass. Throws ConsistencyError if
/// the round trip fails to close, which would be a bug.
ScalarSeries revert_exp(const ScalarSeries& g);

/// Scalar series of H^k coefficients.
ScalarSeries extract_h(const CohSeries& a, std::size_t k);

/// Embeds a scalar series into Q[H]/(H^ring_len).
CohSeries lift(const ScalarSeries& s, std::size_t ring_len);

}  // namespace gwmirror
