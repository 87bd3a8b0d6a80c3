#include "gwmirror/givental.hpp"

#include <string>

#include "gwmirror/errors.hpp"

namespace gwmirror {

CohClass ambient_I(unsigned n, unsigned d) {
  if (n == 0) throw UsageError("ambient_I: n must be positive");
  const std::size_t ring_len = n + 1;
  CohClass denom = CohClass::one(ring_len);
  for (unsigned i = 1; i <= d; ++i) {
    denom *= pow(CohClass::linear(BigRat(1), BigRat(static_cast<long>(i)), ring_len), n + 1);
  }
  return inverse(denom);
}

CohClass linear_product(unsigned l, long first, long last, std::size_t ring_len) {
  CohClass acc = CohClass::one(ring_len);
  for (long i = first; i <= last; ++i) {
    acc *= CohClass::linear(BigRat(static_cast<long>(l)), BigRat(i), ring_len);
  }
  return acc;
}

CohClass hyper_factor(unsigned l, unsigned d, ProductStart start, std::size_t ring_len) {
  if (l == 0) throw UsageError("hyper_factor: degree l must be positive");
  if (d == 0) return CohClass::one(ring_len);
  return linear_product(l, static_cast<long>(start), static_cast<long>(l) * d, ring_len);
}

CohSeries naive_series(unsigned n, unsigned l, std::size_t dmax, ProductStart start) {
  if (l < 1 || l > n + 1) {
    throw UsageError("naive_series: hypersurface degree " + std::to_string(l) +
                     " in P^" + std::to_string(n) +
                     " violates 1 <= l <= n+1 (-K_Y nef required)");
  }
  const std::size_t ring_len = n + 1;
  CohSeries out(dmax, l, CohClass(ring_len));
  for (std::size_t d = 0; d <= dmax; ++d) {
    const auto deg = static_cast<unsigned>(d);
    out.set(d, hyper_factor(l, deg, start, ring_len) * ambient_I(n, deg));
  }
  return out;
}

}  // namespace gwmirror
