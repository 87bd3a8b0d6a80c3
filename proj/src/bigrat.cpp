#include "gwmirror/bigrat.hpp"

#include "gwmirror/errors.hpp"

namespace gwmirror {

BigRat::BigRat(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("BigRat: zero denominator");
  q_.canonicalize();
}

BigRat::BigRat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw DomainError("BigRat: zero denominator");
  q_.canonicalize();
}

BigRat::BigRat(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw DomainError("BigRat: zero denominator");
  q_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw UsageError("BigRat: cannot parse '" + std::string(text) + "'");
  }
  return BigRat(std::move(q));
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DomainError("BigRat: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRat BigRat::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRat(f);
}

BigRat BigRat::binomial(long n, unsigned k) {
  // Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
  mpz_class acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= (n - static_cast<long>(i));
  return BigRat(acc, BigRat::factorial(k).numerator());
}

BigRat pow(BigRat base, unsigned exponent) {
  BigRat result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace gwmirror
