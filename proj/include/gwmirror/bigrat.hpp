#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwmirror {

/// Exact rational number, always kept in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes so the
/// normalization invariant holds for any value a caller can observe.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRat(long num, long den);
  explicit BigRat(const mpz_class& integer) : q_(integer) {}
  BigRat(const mpz_class& num, const mpz_class& den);
  explicit BigRat(mpq_class q);

  /// Parses the canonical text form ("a" or "a/b"). Non-canonical input such as
  /// "4/2" is accepted and normalized.
  static BigRat parse(std::string_view text);

  static BigRat factorial(unsigned n);
  static BigRat binomial(long n, unsigned k);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  /// "a/b" with the "/1" omitted, e.g. "2875", "-45/8".
  std::string to_string() const { return q_.get_str(); }

  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.q_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

BigRat pow(BigRat base, unsigned exponent);

}  // namespace gwmirror
