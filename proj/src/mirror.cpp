#include "gwmirror/mirror.hpp"

#include "gwmirror/errors.hpp"
#include "gwmirror/givental.hpp"

namespace gwmirror {

namespace {

constexpr unsigned kQuinticAmbient = 4;
constexpr unsigned kQuinticDegree = 5;
constexpr std::size_t kQuinticRing = kQuinticAmbient + 1;
constexpr unsigned kCubicDegree = 3;
constexpr std::size_t kPlaneRing = 3;

// exp(d * x) truncated like x.
ScalarSeries exp_multiple(const ScalarSeries& x, unsigned d) {
  return exp(x * BigRat(static_cast<long>(d)));
}

// Solves target = sum_d weight(d) * v_d * q^d * term(d) for v_1..v_dmax, one
// degree at a time. term(d) must have constant coefficient 1, so the degree-e
// equation is linear in v_e with coefficient weight(e).
template <class WeightFn, class TermFn>
std::vector<BigRat> solve_order_by_order(const ScalarSeries& target, WeightFn weight,
                                         TermFn term) {
  const std::size_t dmax = target.dmax();
  std::vector<BigRat> values;
  std::vector<ScalarSeries> terms;
  for (std::size_t e = 1; e <= dmax; ++e) {
    BigRat residual = target[e];
    for (std::size_t d = 1; d < e; ++d) {
      residual -= weight(static_cast<unsigned>(d)) * values[d - 1] * terms[d - 1][e - d];
    }
    terms.push_back(term(static_cast<unsigned>(e)));
    if (!terms.back()[0].is_one()) {
      throw ConsistencyError("recursion: degree-" + std::to_string(e) +
                             " term has constant coefficient " + terms.back()[0].to_string());
    }
    values.push_back(residual / weight(static_cast<unsigned>(e)));
  }
  return values;
}

InvariantTable make_table(std::string name, const std::vector<BigRat>& values) {
  InvariantTable table{std::move(name), {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    table.entries.push_back({static_cast<unsigned>(i + 1), values[i]});
  }
  return table;
}

void check_table_length(const InvariantTable& table, std::size_t dmax) {
  if (table.entries.size() != dmax) {
    throw UsageError("table has " + std::to_string(table.entries.size()) +
                     " entries, series needs " + std::to_string(dmax));
  }
}

}  // namespace

const BigRat& InvariantTable::at(unsigned degree) const {
  for (const InvariantEntry& e : entries) {
    if (e.degree == degree) return e.value;
  }
  throw UsageError(case_name + ": no entry for degree " + std::to_string(degree));
}

MirrorData quintic_F(std::size_t dmax) {
  const CohSeries naive =
      naive_series(kQuinticAmbient, kQuinticDegree, dmax, ProductStart::kFromOne);
  MirrorData md{extract_h(naive, 0), extract_h(naive, 1), extract_h(naive, 2),
                ScalarSeries(dmax, kQuinticDegree, BigRat(0))};
  md.mirror_exponent = md.F1 * inverse(md.F0) * BigRat(1, kQuinticDegree);
  return md;
}

PReconstruction reconstruct_P_quintic(const MirrorData& md) {
  const ScalarSeries ratio = md.F1 * inverse(md.F0);
  // H * F1/F0 has nilpotent constant term, so exp is exact.
  CohSeries h_ratio = lift(ratio, kQuinticRing);
  for (std::size_t d = 0; d <= h_ratio.dmax(); ++d) {
    h_ratio.set(d, h_ratio[d] * CohClass::h_power(1, kQuinticRing));
  }
  CohSeries P0 = scale_by(exp(h_ratio), md.F0);
  CohSeries P1 = scale_by(P0, md.mirror_exponent);
  return {std::move(P0), std::move(P1)};
}

InvariantTable quintic_invariants(std::size_t dmax) {
  if (dmax == 0) return {"quintic", {}};
  const MirrorData md = quintic_F(dmax);
  const ScalarSeries ratio = md.F1 * inverse(md.F0);
  const ScalarSeries target = md.F2 - md.F1 * md.F1 * inverse(md.F0) * BigRat(1, 2);
  const auto values = solve_order_by_order(
      target, [](unsigned d) { return BigRat(static_cast<long>(d), kQuinticDegree); },
      [&](unsigned d) { return md.F0 * exp_multiple(ratio, d); });
  return make_table("quintic", values);
}

ScalarSeries quintic_recursion_rhs(const MirrorData& md, const InvariantTable& table) {
  const std::size_t dmax = md.F0.dmax();
  check_table_length(table, dmax);
  const ScalarSeries ratio = md.F1 * inverse(md.F0);
  ScalarSeries rhs = md.F1 * md.F1 * inverse(md.F0) * BigRat(1, 2);
  for (const InvariantEntry& entry : table.entries) {
    const BigRat weight = BigRat(static_cast<long>(entry.degree), kQuinticDegree) * entry.value;
    const ScalarSeries shift = ScalarSeries::monomial(weight, entry.degree, dmax, kQuinticDegree);
    rhs += shift * md.F0 * exp_multiple(ratio, entry.degree);
  }
  return rhs;
}

InvariantTable quintic_reversion_table(std::size_t dmax) {
  if (dmax == 0) return {"quintic", {}};
  const MirrorData md = quintic_F(dmax);
  const PReconstruction P = reconstruct_P_quintic(md);

  // Left side of the mirror formula, including the Y = 5H degree-0 term.
  CohSeries naive = naive_series(kQuinticAmbient, kQuinticDegree, dmax, ProductStart::kFromOne);
  const CohClass Y = CohClass::h_power(1, kQuinticRing) * BigRat(kQuinticDegree);
  for (std::size_t d = 0; d <= dmax; ++d) naive.set(d, naive[d] * Y);

  const CohSeries scaled = naive * inverse(P.P0);
  // In the degree index, q~^5 = q^5 * exp(F1/F0).
  const ScalarSeries g = md.mirror_exponent * BigRat(kQuinticDegree);
  const CohSeries in_new_variable = substitute(scaled, revert_exp(g));

  if (in_new_variable[0] != Y) {
    throw ConsistencyError("quintic reversion: degree-0 term is " + in_new_variable[0].to_string());
  }
  std::vector<BigRat> values;
  for (std::size_t d = 1; d <= dmax; ++d) {
    const CohClass& c = in_new_variable[d];
    for (std::size_t k = 0; k < 3; ++k) {
      if (!c.coeff(k).is_zero()) {
        throw ConsistencyError("quintic reversion: degree " + std::to_string(d) +
                               " has nonzero H^" + std::to_string(k) + " part");
      }
    }
    values.push_back(c.coeff(3) / BigRat(static_cast<long>(d)));
  }
  return make_table("quintic", values);
}

InvariantTable quintic_crosscheck(std::size_t dmax) {
  const InvariantTable recursion = quintic_invariants(dmax);
  const InvariantTable reversion = quintic_reversion_table(dmax);
  for (std::size_t i = 0; i < recursion.entries.size(); ++i) {
    if (!(recursion.entries[i] == reversion.entries[i])) {
      throw ConsistencyError("quintic crosscheck: degree " + std::to_string(i + 1) +
                             " recursion " + recursion.entries[i].value.to_string() +
                             " != reversion " + reversion.entries[i].value.to_string());
    }
  }
  return reversion;
}

CohSeries localp2_series(std::size_t dmax) {
  CohSeries out(dmax, kCubicDegree, CohClass(kPlaneRing));
  for (std::size_t d = 1; d <= dmax; ++d) {
    const auto deg = static_cast<unsigned>(d);
    const long top = static_cast<long>(kCubicDegree * deg) - 1;
    out.set(d, linear_product(kCubicDegree, 0, top, kPlaneRing) * ambient_I(2, deg));
  }
  return out;
}

MirrorData localp2_F(std::size_t dmax) {
  const CohSeries s = localp2_series(dmax);
  MirrorData md{extract_h(s, 0), extract_h(s, 1), extract_h(s, 2),
                ScalarSeries(dmax, kCubicDegree, BigRat(0))};
  md.mirror_exponent = md.F1 * BigRat(1, kCubicDegree);
  return md;
}

InvariantTable localp2_invariants(std::size_t dmax) {
  if (dmax == 0) return {"local-p2", {}};
  const MirrorData md = localp2_F(dmax);
  const ScalarSeries target = md.F2 - md.F1 * md.F1 * BigRat(1, 2);
  const auto values = solve_order_by_order(
      target, [](unsigned) { return BigRat(1); },
      [&](unsigned d) { return exp_multiple(md.F1, d); });
  return make_table("local-p2", values);
}

ScalarSeries localp2_recursion_rhs(const MirrorData& md, const InvariantTable& table) {
  const std::size_t dmax = md.F1.dmax();
  check_table_length(table, dmax);
  ScalarSeries rhs = md.F1 * md.F1 * BigRat(1, 2);
  for (const InvariantEntry& entry : table.entries) {
    const ScalarSeries shift =
        ScalarSeries::monomial(entry.value, entry.degree, dmax, kCubicDegree);
    rhs += shift * exp_multiple(md.F1, entry.degree);
  }
  return rhs;
}

InvariantTable localp2_kd(const InvariantTable& relative) {
  InvariantTable out{"local-p2-kd", {}};
  for (const InvariantEntry& e : relative.entries) {
    const long sign = (e.degree % 2 == 0) ? 1 : -1;
    out.entries.push_back(
        {e.degree, e.value * BigRat(sign, static_cast<long>(kCubicDegree * e.degree))});
  }
  return out;
}

InvariantTable localp2_kd(std::size_t dmax) { return localp2_kd(localp2_invariants(dmax)); }

std::vector<CohClass> naive_invariants(unsigned n, unsigned l, std::size_t dmax) {
  if (l < 1 || n < 2 || l + 1 > n) {
    throw UsageError("naive_invariants: degree " + std::to_string(l) + " hypersurface in P^" +
                     std::to_string(n) +
                     " is outside 1 <= l <= n-1, where the naive formula has no correction terms");
  }
  std::vector<CohClass> out;
  out.reserve(dmax);
  for (std::size_t d = 1; d <= dmax; ++d) {
    const auto deg = static_cast<unsigned>(d);
    out.push_back(hyper_factor(l, deg, ProductStart::kFromZero, n + 1) * ambient_I(n, deg));
  }
  return out;
}

}  // namespace gwmirror
