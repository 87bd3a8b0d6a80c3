#pragma once

#include <cstddef>

#include "gwmirror/cohclass.hpp"
#include "gwmirror/series.hpp"

namespace gwmirror {

/// Which end the hypersurface product starts from: the i = 0 factor is the
/// hypersurface class Y = l*H itself.
enum class ProductStart : unsigned { kFromZero = 0, kFromOne = 1 };

/// 1-point series of P^n in degree d: prod_{i=1..d} (H + i)^-(n+1) in
/// Q[H]/(H^(n+1)). Degree 0 gives 1.
CohClass ambient_I(unsigned n, unsigned d);

/// prod_{i=first..last} (l*H + i) in Q[H]/(H^ring_len); 1 when the range is empty.
CohClass linear_product(unsigned l, long first, long last, std::size_t ring_len);

/// prod_{i=start..l*d} (l*H + i).
CohClass hyper_factor(unsigned l, unsigned d, ProductStart start, std::size_t ring_len);

/// Naive generating series of a degree-l hypersurface in P^n: the degree-d
/// coefficient is hyper_factor(l, d, start, n+1) * ambient_I(n, d), graded in q^l.
/// Requires 1 <= l <= n+1 (anticanonical class of the hypersurface nef).
CohSeries naive_series(unsigned n, unsigned l, std::size_t dmax, ProductStart start);

}  // namespace gwmirror
