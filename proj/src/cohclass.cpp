#include "gwmirror/cohclass.hpp"

#include <sstream>

#include "gwmirror/errors.hpp"

namespace gwmirror {

CohClass::CohClass(std::size_t ring_len) : coeffs_(ring_len) {
  if (ring_len == 0) throw UsageError("CohClass: ring_len must be positive");
}

CohClass::CohClass(std::size_t ring_len, std::initializer_list<BigRat> low_coeffs)
    : CohClass(ring_len) {
  if (low_coeffs.size() > ring_len) {
    throw UsageError("CohClass: more coefficients than ring_len");
  }
  std::size_t k = 0;
  for (const BigRat& c : low_coeffs) coeffs_[k++] = c;
}

CohClass::CohClass(std::size_t ring_len, std::vector<BigRat> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (ring_len == 0 || coeffs_.size() != ring_len) {
    throw UsageError("CohClass: coefficient count must equal ring_len");
  }
}

CohClass CohClass::scalar(const BigRat& value, std::size_t ring_len) {
  CohClass c(ring_len);
  c.coeffs_[0] = value;
  return c;
}

CohClass CohClass::h_power(std::size_t k, std::size_t ring_len) {
  CohClass c(ring_len);
  if (k < ring_len) c.coeffs_[k] = BigRat(1);
  return c;
}

CohClass CohClass::linear(const BigRat& h_coeff, const BigRat& constant,
                          std::size_t ring_len) {
  CohClass c = scalar(constant, ring_len);
  if (ring_len > 1) c.coeffs_[1] = h_coeff;
  return c;
}

const BigRat& CohClass::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw UsageError("CohClass: H^" + std::to_string(k) + " outside ring_len " +
                     std::to_string(coeffs_.size()));
  }
  return coeffs_[k];
}

bool CohClass::is_zero() const {
  for (const BigRat& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t CohClass::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return coeffs_.size();
}

void CohClass::check_same_ring(const CohClass& o, const char* op) const {
  if (o.ring_len() != ring_len()) {
    throw UsageError(std::string("CohClass ") + op + ": ring_len mismatch (" +
                     std::to_string(ring_len()) + " vs " + std::to_string(o.ring_len()) + ")");
  }
}

CohClass& CohClass::operator+=(const CohClass& o) {
  check_same_ring(o, "+");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  check_same_ring(o, "-");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CohClass& CohClass::operator*=(const CohClass& o) {
  check_same_ring(o, "*");
  const std::size_t len = coeffs_.size();
  std::vector<BigRat> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

CohClass& CohClass::operator*=(const BigRat& s) {
  for (BigRat& c : coeffs_) c *= s;
  return *this;
}

std::string CohClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigRat& c = coeffs_[k];
    if (c.is_zero()) continue;
    BigRat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "H";
    if (k > 1) os << "^" << k;
  }
  return first ? "0" : os.str();
}

CohClass inverse(const CohClass& a) {
  if (!a.is_unit()) throw DomainError("CohClass inverse: H^0 coefficient is zero");
  // a = a0 (1 + n) with n nilpotent, so 1/a = (1/a0) * sum_k (-n)^k.
  const BigRat inv0 = BigRat(1) / a.coeff(0);
  CohClass neg_n = a * (-inv0);
  neg_n += CohClass::one(a.ring_len());
  CohClass term = CohClass::one(a.ring_len());
  CohClass sum = term;
  for (std::size_t k = 1; k < a.ring_len(); ++k) {
    term *= neg_n;
    sum += term;
  }
  return sum * inv0;
}

CohClass exp_nilpotent(const CohClass& a) {
  if (!a.is_nilpotent()) {
    throw DomainError("CohClass exp: argument has nonzero H^0 part " + a.coeff(0).to_string());
  }
  CohClass term = CohClass::one(a.ring_len());
  CohClass sum = term;
  for (std::size_t k = 1; k < a.ring_len(); ++k) {
    term *= a;
    term *= BigRat(1, static_cast<long>(k));
    sum += term;
  }
  return sum;
}

CohClass log_unipotent(const CohClass& a) {
  if (!a.coeff(0).is_one()) {
    throw DomainError("CohClass log: H^0 coefficient must be 1, got " + a.coeff(0).to_string());
  }
  const CohClass n = a - CohClass::one(a.ring_len());
  CohClass power = n;
  CohClass sum(a.ring_len());
  for (std::size_t m = 1; m < a.ring_len(); ++m) {
    const long sign = (m % 2 == 1) ? 1 : -1;
    sum += power * BigRat(sign, static_cast<long>(m));
    power *= n;
  }
  return sum;
}

CohClass pow(const CohClass& a, unsigned exponent) {
  CohClass result = CohClass::one(a.ring_len());
  for (unsigned i = 0; i < exponent; ++i) result *= a;
  return result;
}

BigRat inverse(const BigRat& a) {
  if (a.is_zero()) throw DomainError("BigRat inverse: zero");
  return BigRat(1) / a;
}

BigRat exp_nilpotent(const BigRat& a) {
  if (!a.is_zero()) {
    throw DomainError("exp of nonzero rational " + a.to_string() + " is not rational");
  }
  return BigRat(1);
}

BigRat log_unipotent(const BigRat& a) {
  if (!a.is_one()) {
    throw DomainError("log of rational " + a.to_string() + " other than 1 is not rational");
  }
  return BigRat(0);
}

}  // namespace gwmirror
