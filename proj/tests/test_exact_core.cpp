#include <doctest.h>

#include "gwmirror/bigrat.hpp"
#include "gwmirror/cohclass.hpp"
#include "gwmirror/errors.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using gwmirror::BigRat;
using gwmirror::CohClass;

namespace {

CohClass from_oracle(const oracle::Poly& p) {
  std::vector<BigRat> coeffs;
  for (const auto& c : p) coeffs.emplace_back(mpq_class(c));
  return CohClass(p.size(), coeffs);
}

const CohClass H3 = CohClass::h_power(1, 3);
const CohClass one3 = CohClass::one(3);

}  // namespace

TEST_CASE("BigRat canonical text form") {
  CHECK(BigRat(2875).to_string() == "2875");
  CHECK(BigRat(-90, 16).to_string() == "-45/8");
  CHECK(BigRat(4, -2).to_string() == "-2");
  CHECK(BigRat(0, 7).to_string() == "0");
  CHECK(BigRat(0, 7).denominator() == 1);
  CHECK(BigRat::parse("4876875/8") == BigRat(4876875, 8));
  CHECK(BigRat::parse("8/4").to_string() == "2");
  CHECK(BigRat(609250) + BigRat(2875, 8) == BigRat::parse("4876875/8"));
  CHECK_THROWS_AS(BigRat::parse("1/0"), gwmirror::DomainError);
  CHECK_THROWS_AS(BigRat::parse("abc"), gwmirror::UsageError);
  CHECK_THROWS_AS(BigRat(1) / BigRat(0), gwmirror::DomainError);
}

TEST_CASE("BigRat factorials and binomials are exact") {
  CHECK(BigRat::factorial(0) == 1);
  CHECK(BigRat::factorial(20).to_string() == "2432902008176640000");
  CHECK(BigRat::factorial(25).to_string() == "15511210043330985984000000");
  CHECK(BigRat::binomial(10, 3) == 120);
  CHECK(BigRat::binomial(-5, 4) == 70);  // coefficient in (1+H)^-5
  CHECK(gwmirror::pow(BigRat(-2, 3), 3) == BigRat(-8, 27));
}

TEST_CASE("coh_mul") {
  CHECK(H3 * CohClass::h_power(2, 3) == CohClass(3));
  CHECK((one3 + H3) * (one3 - H3) == one3 - CohClass::h_power(2, 3));
  CHECK((one3 + H3) * one3 == one3 + H3);
  CHECK_THROWS_AS(CohClass::one(3) * CohClass::one(4), gwmirror::UsageError);
  CHECK_THROWS_AS(CohClass::one(3) + CohClass::one(4), gwmirror::UsageError);
  CHECK_THROWS_AS(CohClass(0), gwmirror::UsageError);
}

TEST_CASE("coh_inv") {
  CHECK(gwmirror::inverse(one3 + H3) == CohClass(3, {1, -1, 1}));

  // (1+H)^-5 against long division of the expanded (1+H)^5.
  const oracle::Poly expected = oracle::long_division_inverse(oracle::one_plus_h_power(5, 5));
  const CohClass frozen(5, {1, -5, 15, -35, 70});
  CHECK(from_oracle(expected) == frozen);
  const CohClass one_plus_h = CohClass::linear(1, 1, 5);
  CHECK(gwmirror::inverse(gwmirror::pow(one_plus_h, 5)) == frozen);

  CHECK(gwmirror::inverse(CohClass::scalar(2, 1)) == CohClass::scalar(BigRat(1, 2), 1));
  CHECK_THROWS_AS(gwmirror::inverse(H3), gwmirror::DomainError);
}

TEST_CASE("coh_exp_nilpotent") {
  CHECK(gwmirror::exp_nilpotent(CohClass(3)) == one3);
  CHECK(gwmirror::exp_nilpotent(H3) == CohClass(3, {1, 1, BigRat(1, 2)}));
  CHECK(gwmirror::exp_nilpotent(H3 * BigRat(2)) == CohClass(3, {1, 2, 2}));
  CHECK_THROWS_AS(gwmirror::exp_nilpotent(one3), gwmirror::DomainError);
  CHECK_THROWS_AS(gwmirror::log_unipotent(H3), gwmirror::DomainError);
}

TEST_CASE("CohClass printing") {
  CHECK(CohClass(5, {1, -5, 15, -35, 70}).to_string() == "1 - 5*H + 15*H^2 - 35*H^3 + 70*H^4");
  CHECK(CohClass(3).to_string() == "0");
  CHECK(CohClass(3, {0, BigRat(-1, 2)}).to_string() == "-1/2*H");
}

TEST_CASE("exact-core properties") {
  for (const auto& r : {props::bigrat_normalization(), props::coh_ring_axioms(),
                        props::coh_inverse_roundtrip(), props::coh_exp_log()}) {
    CHECK_MESSAGE(r.ok(), r.describe());
    CHECK(r.cases >= 100);
  }
}
