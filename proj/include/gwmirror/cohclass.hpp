#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "gwmirror/bigrat.hpp"

namespace gwmirror {

/// Element of the truncated ring Q[H]/(H^ring_len), the rational cohomology of
/// P^n with ring_len = n + 1. Stored densely: coeff(k) is the coefficient of H^k.
///
/// ring_len travels with every value. Binary operations on values of different
/// ring_len throw UsageError rather than silently truncating.
class CohClass {
 public:
  explicit CohClass(std::size_t ring_len);
  CohClass(std::size_t ring_len, std::initializer_list<BigRat> low_coeffs);
  CohClass(std::size_t ring_len, std::vector<BigRat> coeffs);

  static CohClass scalar(const BigRat& value, std::size_t ring_len);
  static CohClass one(std::size_t ring_len) { return scalar(BigRat(1), ring_len); }
  /// H^k; zero when k >= ring_len.
  static CohClass h_power(std::size_t k, std::size_t ring_len);
  /// a*H + b, the linear factors that appear in every hypergeometric product.
  static CohClass linear(const BigRat& h_coeff, const BigRat& constant, std::size_t ring_len);

  std::size_t ring_len() const { return coeffs_.size(); }
  const BigRat& coeff(std::size_t k) const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_unit() const { return !coeffs_.front().is_zero(); }
  bool is_nilpotent() const { return coeffs_.front().is_zero(); }
  /// Smallest k with nonzero H^k coefficient, or ring_len for zero.
  std::size_t valuation() const;

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const CohClass& o);
  CohClass& operator*=(const BigRat& s);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const CohClass& b) { return a *= b; }
  friend CohClass operator*(CohClass a, const BigRat& s) { return a *= s; }
  friend CohClass operator*(const BigRat& s, CohClass a) { return a *= s; }
  friend CohClass operator-(CohClass a) { return a *= BigRat(-1); }

  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "1 - 5*H + 15*H^2"; "0" for the zero class.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CohClass& c) {
    return os << c.to_string();
  }

 private:
  void check_same_ring(const CohClass& o, const char* op) const;

  std::vector<BigRat> coeffs_;
};

/// Multiplicative inverse of a unit (nonzero H^0 coefficient).
CohClass inverse(const CohClass& a);

/// exp(a) for nilpotent a; the series stops at H^(ring_len-1).
CohClass exp_nilpotent(const CohClass& a);

/// log(a) for a = 1 + nilpotent.
CohClass log_unipotent(const CohClass& a);

CohClass pow(const CohClass& a, unsigned exponent);

// Uniform coefficient-ring interface shared with BigRat, used by the series module.
inline CohClass zero_like(const CohClass& c) { return CohClass(c.ring_len()); }
inline CohClass one_like(const CohClass& c) { return CohClass::one(c.ring_len()); }
inline bool is_unit(const CohClass& c) { return c.is_unit(); }
inline bool is_nilpotent(const CohClass& c) { return c.is_nilpotent(); }
inline bool is_unipotent(const CohClass& c) {
  return c.coeff(0).is_one();
}
inline bool same_ring(const CohClass& a, const CohClass& b) {
  return a.ring_len() == b.ring_len();
}

inline BigRat zero_like(const BigRat&) { return BigRat(0); }
inline BigRat one_like(const BigRat&) { return BigRat(1); }
inline bool is_unit(const BigRat& c) { return !c.is_zero(); }
inline bool is_nilpotent(const BigRat& c) { return c.is_zero(); }
inline bool is_unipotent(const BigRat& c) { return c.is_one(); }
inline bool same_ring(const BigRat&, const BigRat&) { return true; }
BigRat inverse(const BigRat& a);
BigRat exp_nilpotent(const BigRat& a);
BigRat log_unipotent(const BigRat& a);

}  // namespace gwmirror
