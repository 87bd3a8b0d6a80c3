#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gwmirror/bigrat.hpp"

namespace gwmirror {

/// Exponent vector (k_1, ..., k_v, t, z).
using Monomial = std::vector<std::uint16_t>;

/// A formal variable of the lemma ring: x_i (0-based index), t, or z.
struct PolyVar {
  enum class Kind { kX, kT, kZ };
  Kind kind;
  std::size_t index = 0;

  static PolyVar x(std::size_t i) { return {Kind::kX, i}; }
  static PolyVar t() { return {Kind::kT, 0}; }
  static PolyVar z() { return {Kind::kZ, 0}; }
};

/// Sparse polynomial over Q in x_1..x_v, t, z, truncated in total x-degree.
///
/// Terms of x-degree above xdeg_max are dropped by every operation, so log and
/// exp of series with x-adically small arguments are finite sums. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly(std::size_t nvars, unsigned xdeg_max);

  static MultiPoly constant(const BigRat& c, std::size_t nvars, unsigned xdeg_max);
  static MultiPoly variable(PolyVar var, std::size_t nvars, unsigned xdeg_max);

  std::size_t nvars() const { return nvars_; }
  unsigned xdeg_max() const { return xdeg_max_; }
  const std::map<Monomial, BigRat>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigRat coeff(const Monomial& m) const;
  /// Adds c to the coefficient of m; ignored if m exceeds the x-degree bound.
  void add_term(const Monomial& m, const BigRat& c);

  unsigned x_degree(const Monomial& m) const;
  /// Part of x-degree exactly 0, i.e. the polynomial in t, z only.
  MultiPoly x_constant_part() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRat& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const BigRat& s) { return a *= s; }
  friend MultiPoly operator*(const BigRat& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.xdeg_max_ == b.xdeg_max_ && a.terms_ == b.terms_;
  }

  /// "c · x1^k1·x2^k2·t^a·z^b" with unit exponents and the zero-exponent factors elided.
  std::string term_to_string(const Monomial& m, const BigRat& c) const;
  std::string to_string() const;

 private:
  void check_same_ring(const MultiPoly& o) const;

  std::size_t nvars_;
  unsigned xdeg_max_;
  std::map<Monomial, BigRat> terms_;
};

/// Formal partial derivative.
MultiPoly partial(const MultiPoly& p, PolyVar var);

/// log(p) for p whose x-degree-0 part is exactly 1.
MultiPoly log(const MultiPoly& p);

/// exp(p) for p without x-degree-0 terms.
MultiPoly exp(const MultiPoly& p);

}  // namespace gwmirror
