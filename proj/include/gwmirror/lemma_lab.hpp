#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwmirror/bigrat.hpp"
#include "gwmirror/multipoly.hpp"

namespace gwmirror {

/// The three admissible (a_i, b_i) pairs of a variable in the P(t, z) family.
enum class VarType {
  kInert,    // (0, 0)
  kPower,    // (1, 0)
  kFalling,  // (0, 1)
};

unsigned a_of(VarType type);
unsigned b_of(VarType type);
/// Throws UsageError for pairs other than (0,0), (1,0), (0,1).
VarType var_type_from_pair(unsigned a, unsigned b);

struct LemmaConfig {
  std::vector<VarType> types;  // one per x_i; ignored by build_Q
  std::vector<BigRat> c;       // same length as types
  unsigned xdeg_max = 1;
  std::uint64_t seed = 0;

  std::size_t nvars() const { return types.size(); }
  bool all_c_zero() const;
  void validate() const;
  /// "[(1,0) c=3/4, (0,1) c=-2]"
  std::string summary() const;
};

/// Random configuration with nvars variables: each type uniform over the three
/// pairs, each c_i = p/q with |p| <= 9 and 1 <= q <= 9. Deterministic in seed.
LemmaConfig sample_config(std::uint64_t seed, std::size_t nvars, unsigned xdeg_max);

/// P(t,z) = sum_k x^k/k! t^(a.k) prod_{i=0..b.k-1} (c.k + z + t - i), over |k| <= xdeg_max.
MultiPoly build_P(const LemmaConfig& cfg);

/// Q(t) = sum_k x^k/k! t prod_{i=1..|k|-1} (c.k + t - i), with the k = 0 term equal to 1.
MultiPoly build_Q(const LemmaConfig& cfg);

struct LemmaReport {
  bool passed = true;
  std::string check;                    // which identity failed, empty on pass
  std::optional<std::string> offending;  // lexicographically first surviving term

  void fail_on(const std::string& name, const MultiPoly& residual);
};

/// d_t^2 ln P, d_z^2 ln P and d_t d_z ln P vanish modulo the truncation.
LemmaReport check_A1(const LemmaConfig& cfg);

/// (t d_t - 1) ln Q vanishes modulo the truncation.
LemmaReport check_A2(const LemmaConfig& cfg);

/// With every c_i = 0: P = exp(sum x_i t^(a_i)) * (1 + sum_{b_j=1} x_j)^(z+t) over the
/// non-falling and falling variables respectively, and Q = (1 + sum x_i)^t.
/// Throws UsageError if some c_i is nonzero.
LemmaReport closed_form_check(const LemmaConfig& cfg);

enum class LemmaKind { kA1, kA2 };

struct TrialOutcome {
  LemmaConfig config;
  LemmaReport report;
  bool closed_form_ran = false;

  /// One report line: seed, config summary, PASS/FAIL and the offending term.
  std::string line() const;
};

/// Runs trials with seeds seed, seed+1, ...; closed_form_check is added whenever a
/// sampled configuration has all c_i = 0.
std::vector<TrialOutcome> run_lemma_trials(LemmaKind kind, std::size_t nvars, unsigned xdeg_max,
                                           unsigned trials, std::uint64_t seed);

}  // namespace gwmirror
