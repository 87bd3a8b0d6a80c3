#include "gwmirror/series.hpp"

namespace gwmirror {

ScalarSeries revert_exp(const ScalarSeries& g) {
  if (!g[0].is_zero()) throw DomainError("revert_exp: g has nonzero constant term");
  const std::size_t dmax = g.dmax();
  ScalarSeries h(dmax, g.step(), BigRat(0));
  for (std::size_t pass = 0; pass < dmax; ++pass) h = -substitute(g, h);

  // q -> q*exp(g) -> back through h must be the identity series q.
  const ScalarSeries id = ScalarSeries::monomial(BigRat(1), 1, dmax, g.step());
  if (substitute(substitute(id, g), h) != id) {
    throw ConsistencyError("revert_exp: round trip did not close after " +
                           std::to_string(dmax) + " passes");
  }
  return h;
}

ScalarSeries extract_h(const CohSeries& a, std::size_t k) {
  const std::size_t ring_len = a[0].ring_len();
  if (k >= ring_len) {
    throw UsageError("extract_h: H^" + std::to_string(k) + " outside ring_len " +
                     std::to_string(ring_len));
  }
  ScalarSeries out(a.dmax(), a.step(), BigRat(0));
  for (std::size_t d = 0; d <= a.dmax(); ++d) out.set(d, a[d].coeff(k));
  return out;
}

CohSeries lift(const ScalarSeries& s, std::size_t ring_len) {
  CohSeries out(s.dmax(), s.step(), CohClass(ring_len));
  for (std::size_t d = 0; d <= s.dmax(); ++d) out.set(d, CohClass::scalar(s[d], ring_len));
  return out;
}

}  // namespace gwmirror
