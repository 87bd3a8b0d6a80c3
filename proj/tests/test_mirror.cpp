#include <doctest.h>

#include "gwmirror/errors.hpp"
#include "gwmirror/mirror.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using gwmirror::BigRat;
using gwmirror::CohClass;

TEST_CASE("quintic_F") {
  const auto md = gwmirror::quintic_F(2);
  CHECK(md.F0[0] == 1);
  CHECK(md.F0[1] == 120);
  CHECK(md.F1[1] == 770);
  CHECK(md.F2[1] == 575);
  CHECK(md.F0[2] == BigRat::factorial(10) / gwmirror::pow(BigRat(2), 5));
  CHECK(md.F1[0] == 0);
  CHECK(md.mirror_exponent == md.F1 * gwmirror::inverse(md.F0) * BigRat(1, 5));
}

TEST_CASE("reconstruct_P_quintic") {
  const auto md = gwmirror::quintic_F(4);
  const auto rec = gwmirror::reconstruct_P_quintic(md);
  const auto inv = gwmirror::inverse(md.F0);
  CHECK(gwmirror::extract_h(rec.P0, 0) == md.F0);
  CHECK(gwmirror::extract_h(rec.P0, 1) == md.F1);
  CHECK(gwmirror::extract_h(rec.P0, 2) == md.F1 * md.F1 * inv * BigRat(1, 2));
}

TEST_CASE("quintic_invariants") {
  const auto table = gwmirror::quintic_invariants(2);
  REQUIRE(table.entries.size() == 2);
  CHECK(table.at(1) == 2875);
  CHECK(table.at(2) == BigRat::parse("4876875/8"));
  CHECK(table.at(2) == BigRat(609250) + BigRat(2875, 8));
  CHECK(gwmirror::quintic_invariants(0).entries.empty());
  CHECK_THROWS(table.at(3));
}

TEST_CASE("quintic_crosscheck") {
  CHECK(gwmirror::quintic_crosscheck(0).entries.empty());
  for (std::size_t dmax = 1; dmax <= 6; ++dmax) {
    CHECK(gwmirror::quintic_reversion_table(dmax).entries == gwmirror::quintic_invariants(dmax).entries);
  }
  const auto t = gwmirror::quintic_crosscheck(2);
  CHECK(t.at(1) == 2875);
  CHECK(t.at(2) == BigRat::parse("4876875/8"));
}

TEST_CASE("localp2_F") {
  // 3H(3H+1)(3H+2)(1+H)^-3 mod H^3 = 6H + 9H^2.
  const oracle::Poly direct = oracle::mul(oracle::linear_factors(3, 0, 2, 3),
                                          oracle::long_division_inverse(oracle::one_plus_h_power(3, 3)));
  REQUIRE(direct[0] == 0);
  REQUIRE(direct[1] == 6);
  REQUIRE(direct[2] == 9);
  const auto md = gwmirror::localp2_F(3);
  CHECK(md.F1[1] == 6);
  CHECK(md.F2[1] == 9);
  const auto series = gwmirror::localp2_series(5);
  CHECK(gwmirror::extract_h(series, 0) == gwmirror::ScalarSeries(5, 3, BigRat(0)));
  CHECK(md.mirror_exponent == md.F1 * BigRat(1, 3));
}

TEST_CASE("localp2_invariants") {
  const std::vector<std::string> expected = {"9",          "135/4",  "244",       "36999/16",
                                             "635634/25",  "307095", "193919175/49", "3422490759/64"};
  const auto table = gwmirror::localp2_invariants(8);
  REQUIRE(table.entries.size() == 8);
  for (unsigned d = 1; d <= 8; ++d) CHECK(table.at(d).to_string() == expected[d - 1]);

  const auto kd = gwmirror::localp2_kd(3);
  CHECK(kd.at(1) == -3);
  CHECK(kd.at(2) == BigRat(45, 8));
  CHECK(kd.at(3) == BigRat(-244, 9));
  for (unsigned d = 1; d <= 3; ++d) {
    const BigRat sign = d % 2 == 0 ? BigRat(1) : BigRat(-1);
    CHECK(table.at(d) == sign * BigRat(3 * static_cast<long>(d)) * kd.at(d));
  }
}

TEST_CASE("naive_invariants") {
  const auto v = gwmirror::naive_invariants(4, 2, 3);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == CohClass(5, {0, 4, -8, 8, 0}));
  for (const auto& c : v) CHECK(c.coeff(0) == 0);
  const auto cubic = gwmirror::naive_invariants(3, 1, 2);
  CHECK(cubic[0] == CohClass(4, {0, 1, -3, 6}));  // H(H+1)(1+H)^-4
  for (unsigned d = 1; d <= 2; ++d) {
    const oracle::Poly expected = oracle::mul(oracle::linear_factors(1, 0, d, 4), oracle::ambient(3, d));
    for (std::size_t k = 0; k < 4; ++k) CHECK(cubic[d - 1].coeff(k).raw() == expected[k]);
  }
  CHECK_THROWS_AS(gwmirror::naive_invariants(4, 4, 1), gwmirror::UsageError);
  CHECK_THROWS_AS(gwmirror::naive_invariants(4, 5, 1), gwmirror::UsageError);
  CHECK_THROWS_AS(gwmirror::naive_invariants(4, 0, 1), gwmirror::UsageError);
}

TEST_CASE("mirror properties") {
  for (const auto& r : {props::quintic_resubstitution(), props::localp2_resubstitution()}) {
    CHECK_MESSAGE(r.ok(), r.describe());
    CHECK(r.cases >= 100);
  }
}
