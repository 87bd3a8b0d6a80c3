#include "gwmirror/lemma_lab.hpp"

#include <functional>
#include <random>

#include "gwmirror/errors.hpp"

namespace gwmirror {

namespace {

// Uniform on [lo, hi]; modulo reduction keeps the stream platform-independent.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

// Calls visit(k) for every multi-index of length nvars with |k| <= max_total.
void for_each_multi_index(std::size_t nvars, unsigned max_total,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> k(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == nvars) {
      visit(k);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      k[i] = e;
      rec(i + 1, left - e);
    }
    k[i] = 0;
  };
  rec(0, max_total);
}

// x^k / k! as a polynomial.
MultiPoly scaled_monomial(const std::vector<unsigned>& k, unsigned xdeg_max) {
  BigRat inv_fact(1);
  Monomial m(k.size() + 2, 0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    m[i] = static_cast<std::uint16_t>(k[i]);
    inv_fact /= BigRat::factorial(k[i]);
  }
  MultiPoly p(k.size(), xdeg_max);
  p.add_term(m, inv_fact);
  return p;
}

BigRat dot_c(const LemmaConfig& cfg, const std::vector<unsigned>& k) {
  BigRat acc(0);
  for (std::size_t i = 0; i < k.size(); ++i) acc += cfg.c[i] * BigRat(static_cast<long>(k[i]));
  return acc;
}

// constant + t (+ z when with_z).
MultiPoly shifted_tz(const BigRat& constant, bool with_z, std::size_t nvars, unsigned xdeg_max) {
  MultiPoly f = MultiPoly::constant(constant, nvars, xdeg_max);
  f += MultiPoly::variable(PolyVar::t(), nvars, xdeg_max);
  if (with_z) f += MultiPoly::variable(PolyVar::z(), nvars, xdeg_max);
  return f;
}

}  // namespace

unsigned a_of(VarType type) { return type == VarType::kPower ? 1 : 0; }
unsigned b_of(VarType type) { return type == VarType::kFalling ? 1 : 0; }

VarType var_type_from_pair(unsigned a, unsigned b) {
  if (a == 0 && b == 0) return VarType::kInert;
  if (a == 1 && b == 0) return VarType::kPower;
  if (a == 0 && b == 1) return VarType::kFalling;
  throw UsageError("lemma config: (a,b) = (" + std::to_string(a) + "," + std::to_string(b) +
                   ") is not one of (0,0), (1,0), (0,1)");
}

bool LemmaConfig::all_c_zero() const {
  for (const BigRat& ci : c) {
    if (!ci.is_zero()) return false;
  }
  return true;
}

void LemmaConfig::validate() const {
  if (c.size() != types.size()) throw UsageError("lemma config: need one c_i per variable");
  if (xdeg_max == 0) throw UsageError("lemma config: xdeg_max must be positive");
}

std::string LemmaConfig::summary() const {
  std::string out = "[";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i != 0) out += ", ";
    out += "(" + std::to_string(a_of(types[i])) + "," + std::to_string(b_of(types[i])) +
           ") c=" + c[i].to_string();
  }
  return out + "]";
}

LemmaConfig sample_config(std::uint64_t seed, std::size_t nvars, unsigned xdeg_max) {
  std::mt19937_64 rng(seed);
  LemmaConfig cfg;
  cfg.xdeg_max = xdeg_max;
  cfg.seed = seed;
  for (std::size_t i = 0; i < nvars; ++i) {
    cfg.types.push_back(static_cast<VarType>(draw(rng, 0, 2)));
    const long num = draw(rng, -9, 9);
    const long den = draw(rng, 1, 9);
    cfg.c.emplace_back(num, den);
  }
  return cfg;
}

MultiPoly build_P(const LemmaConfig& cfg) {
  cfg.validate();
  const std::size_t v = cfg.nvars();
  const unsigned D = cfg.xdeg_max;
  MultiPoly P(v, D);
  const MultiPoly t = MultiPoly::variable(PolyVar::t(), v, D);
  for_each_multi_index(v, D, [&](const std::vector<unsigned>& k) {
    unsigned ak = 0;
    unsigned bk = 0;
    for (std::size_t i = 0; i < v; ++i) {
      ak += a_of(cfg.types[i]) * k[i];
      bk += b_of(cfg.types[i]) * k[i];
    }
    MultiPoly term = scaled_monomial(k, D);
    for (unsigned j = 0; j < ak; ++j) term = term * t;
    const BigRat ck = dot_c(cfg, k);
    for (unsigned i = 0; i < bk; ++i) {
      term = term * shifted_tz(ck - BigRat(static_cast<long>(i)), true, v, D);
    }
    P += term;
  });
  return P;
}

MultiPoly build_Q(const LemmaConfig& cfg) {
  cfg.validate();
  const std::size_t v = cfg.nvars();
  const unsigned D = cfg.xdeg_max;
  MultiPoly Q = MultiPoly::constant(BigRat(1), v, D);
  const MultiPoly t = MultiPoly::variable(PolyVar::t(), v, D);
  for_each_multi_index(v, D, [&](const std::vector<unsigned>& k) {
    unsigned total = 0;
    for (unsigned ki : k) total += ki;
    if (total == 0) return;
    MultiPoly term = scaled_monomial(k, D) * t;
    const BigRat ck = dot_c(cfg, k);
    for (unsigned i = 1; i < total; ++i) {
      term = term * shifted_tz(ck - BigRat(static_cast<long>(i)), false, v, D);
    }
    Q += term;
  });
  return Q;
}

void LemmaReport::fail_on(const std::string& name, const MultiPoly& residual) {
  if (residual.is_zero() || !passed) return;
  passed = false;
  check = name;
  const auto& [m, c] = *residual.terms().begin();
  offending = residual.term_to_string(m, c);
}

LemmaReport check_A1(const LemmaConfig& cfg) {
  const MultiPoly L = log(build_P(cfg));
  const MultiPoly Lt = partial(L, PolyVar::t());
  const MultiPoly Lz = partial(L, PolyVar::z());
  LemmaReport report;
  report.fail_on("d_t^2 ln P", partial(Lt, PolyVar::t()));
  report.fail_on("d_z^2 ln P", partial(Lz, PolyVar::z()));
  report.fail_on("d_t d_z ln P", partial(Lt, PolyVar::z()));
  return report;
}

LemmaReport check_A2(const LemmaConfig& cfg) {
  const MultiPoly L = log(build_Q(cfg));
  const MultiPoly t = MultiPoly::variable(PolyVar::t(), cfg.nvars(), cfg.xdeg_max);
  LemmaReport report;
  report.fail_on("(t d_t - 1) ln Q", t * partial(L, PolyVar::t()) - L);
  return report;
}

LemmaReport closed_form_check(const LemmaConfig& cfg) {
  cfg.validate();
  if (!cfg.all_c_zero()) throw UsageError("closed_form_check: every c_i must be zero");
  const std::size_t v = cfg.nvars();
  const unsigned D = cfg.xdeg_max;
  const MultiPoly one = MultiPoly::constant(BigRat(1), v, D);
  const MultiPoly t = MultiPoly::variable(PolyVar::t(), v, D);
  const MultiPoly z = MultiPoly::variable(PolyVar::z(), v, D);

  MultiPoly exponent_sum(v, D);  // sum x_i t^(a_i) over non-falling variables
  MultiPoly falling_sum(v, D);   // sum x_j over falling variables
  MultiPoly all_sum(v, D);
  for (std::size_t i = 0; i < v; ++i) {
    const MultiPoly xi = MultiPoly::variable(PolyVar::x(i), v, D);
    all_sum += xi;
    if (cfg.types[i] == VarType::kFalling) {
      falling_sum += xi;
    } else {
      exponent_sum += a_of(cfg.types[i]) == 1 ? xi * t : xi;
    }
  }
  const MultiPoly R = exp(exponent_sum);
  const MultiPoly S = exp((z + t) * log(one + falling_sum));
  const MultiPoly binomial_t = exp(t * log(one + all_sum));

  LemmaReport report;
  report.fail_on("P - R*S", build_P(cfg) - R * S);
  report.fail_on("Q - (1+sum x)^t", build_Q(cfg) - binomial_t);
  return report;
}

std::string TrialOutcome::line() const {
  std::string out = "seed=" + std::to_string(config.seed) +
                    " vars=" + std::to_string(config.nvars()) +
                    " xdeg=" + std::to_string(config.xdeg_max) + " " + config.summary();
  if (closed_form_ran) out += " closed-form";
  if (report.passed) return out + " PASS";
  out += " FAIL " + report.check;
  if (report.offending) out += ": " + *report.offending;
  return out;
}

std::vector<TrialOutcome> run_lemma_trials(LemmaKind kind, std::size_t nvars, unsigned xdeg_max,
                                           unsigned trials, std::uint64_t seed) {
  std::vector<TrialOutcome> out;
  out.reserve(trials);
  for (unsigned i = 0; i < trials; ++i) {
    TrialOutcome trial{sample_config(seed + i, nvars, xdeg_max), {}, false};
    trial.report = kind == LemmaKind::kA1 ? check_A1(trial.config) : check_A2(trial.config);
    if (trial.report.passed && trial.config.all_c_zero()) {
      trial.report = closed_form_check(trial.config);
      trial.closed_form_ran = true;
    }
    out.push_back(std::move(trial));
  }
  return out;
}

}  // namespace gwmirror
