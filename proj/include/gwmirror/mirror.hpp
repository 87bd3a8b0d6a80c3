#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gwmirror/bigrat.hpp"
#include "gwmirror/cohclass.hpp"
#include "gwmirror/series.hpp"

namespace gwmirror {

/// Scalar parts of a naive series, F_k = H^k coefficient.
///
/// mirror_exponent is the per-degree exponent of the change of variables: the
/// quintic uses F1/(5*F0) (so q~^5 = q^5 * exp(5*mirror_exponent)); the plane
/// cubic uses F1/3, the slope c of Q(t) = exp(c*t).
struct MirrorData {
  ScalarSeries F0;
  ScalarSeries F1;
  ScalarSeries F2;
  ScalarSeries mirror_exponent;
};

struct InvariantEntry {
  unsigned degree;
  BigRat value;

  friend bool operator==(const InvariantEntry&, const InvariantEntry&) = default;
};

/// Exact invariants indexed by curve degree, degrees 1, 2, ... in order.
struct InvariantTable {
  std::string case_name;
  std::vector<InvariantEntry> entries;

  const BigRat& at(unsigned degree) const;
  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

// Quintic threefold in P^4.

MirrorData quintic_F(std::size_t dmax);

struct PReconstruction {
  CohSeries P0;
  CohSeries P1;
};

/// P0 = F0 * exp(H*F1/F0) and P1 = P0 * F1/(5*F0), in Q[H]/(H^5).
PReconstruction reconstruct_P_quintic(const MirrorData& md);

/// n_d for d = 1..dmax, solved degree by degree from
///   F2 = F1^2/(2 F0) + 1/5 * sum_d d n_d q^(5d) F0 exp(d F1/F0).
InvariantTable quintic_invariants(std::size_t dmax);

/// Right-hand side of the quintic recursion evaluated at a given table.
ScalarSeries quintic_recursion_rhs(const MirrorData& md, const InvariantTable& table);

/// n_d read off the mirror-transformed series: 5H * naive / P0, rewritten in
/// q~ via revert_exp, has H^3 coefficient d*n_d at q~^(5d). Independent of
/// quintic_invariants.
InvariantTable quintic_reversion_table(std::size_t dmax);

/// Runs both quintic routes and throws ConsistencyError unless they agree.
InvariantTable quintic_crosscheck(std::size_t dmax);

// Plane cubic (local P^2).

/// F1, F2 of sum_{d>0} 3H prod_{i=1..3d-1}(3H+i) / prod_{i=1..d}(H+i)^3 q^(3d)
/// in Q[H]/(H^3). F0 is identically zero.
MirrorData localp2_F(std::size_t dmax);

/// The degree-d series in Q[H]/(H^3) whose parts localp2_F extracts.
CohSeries localp2_series(std::size_t dmax);

/// I_{d,(3d)}(1) for d = 1..dmax, solved from F2 = F1^2/2 + sum_d I_d q^(3d) exp(d F1).
InvariantTable localp2_invariants(std::size_t dmax);

ScalarSeries localp2_recursion_rhs(const MirrorData& md, const InvariantTable& table);

/// K_d = (-1)^d I_{d,(3d)}(1) / (3d).
InvariantTable localp2_kd(std::size_t dmax);
InvariantTable localp2_kd(const InvariantTable& relative);

// Hypersurfaces of degree l <= n-1 in P^n, where no correction terms arise.

/// I_d^Y = prod_{i=0..l*d}(l*H + i) * I_d^X for d = 1..dmax (entry d-1). The
/// degree-0 value Y = l*H is a convention and is not emitted.
std::vector<CohClass> naive_invariants(unsigned n, unsigned l, std::size_t dmax);

}  // namespace gwmirror
