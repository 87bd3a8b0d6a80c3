// Acceptance report: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gwmirror/cli.hpp"
#include "gwmirror/givental.hpp"
#include "gwmirror/lemma_lab.hpp"
#include "gwmirror/mirror.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

using gwmirror::BigRat;
using gwmirror::LemmaConfig;
using gwmirror::VarType;

struct Verdict {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 means no runtime bound
  std::function<Verdict()> body;
};

std::string cli_stdout(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = gwmirror::cli::run(args, out, err);
  return out.str();
}

Verdict quintic_reproduction() {
  int code = 0;
  const std::string out = cli_stdout({"quintic", "--dmax", "2", "--format", "csv"}, code);
  const std::string expected = "d,value\n1,2875\n2,4876875/8\n";
  const bool ok = code == 0 && out == expected &&
                  BigRat::parse("4876875/8") == BigRat(609250) + BigRat(2875, 8);
  return {ok, ok ? "n_1 = 2875, n_2 = 4876875/8" : "got: " + out};
}

Verdict quintic_crosscheck() {
  const auto recursion = gwmirror::quintic_invariants(6);
  const auto reversion = gwmirror::quintic_reversion_table(6);
  const bool ok = recursion.entries.size() == 6 && recursion.entries == reversion.entries;
  return {ok, "dmax 6, n_6 = " + recursion.at(6).to_string()};
}

Verdict local_p2_table() {
  int code = 0;
  const std::string out = cli_stdout({"local-p2", "--dmax", "8", "--format", "csv"}, code);
  const std::string expected =
      "d,value\n1,9\n2,135/4\n3,244\n4,36999/16\n5,635634/25\n6,307095\n7,193919175/49\n"
      "8,3422490759/64\n";
  const bool ok = code == 0 && out == expected;
  return {ok, ok ? "8/8 values exact" : "got: " + out};
}

Verdict lemma_a1() {
  int passed = 0;
  std::string first_failure;
  for (int i = 0; i < 20; ++i) {
    const LemmaConfig cfg = gwmirror::sample_config(4000 + i, 1 + i % 4, 5);
    const auto report = gwmirror::check_A1(cfg);
    if (report.passed) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = cfg.summary() + " " + report.check + ": " + report.offending.value_or("");
    }
  }
  return {passed == 20, std::to_string(passed) + "/20 configurations, v <= 4, xdeg 5" +
                            (first_failure.empty() ? "" : "; " + first_failure)};
}

Verdict lemma_a2() {
  int passed = 0;
  for (int i = 0; i < 20; ++i) {
    if (gwmirror::check_A2(gwmirror::sample_config(5000 + i, 1 + i % 4, 5)).passed) ++passed;
  }
  int closed = 0;
  for (std::size_t v = 0; v <= 4; ++v) {
    LemmaConfig cfg = gwmirror::sample_config(6000 + v, v, 5);
    cfg.c.assign(v, BigRat(0));
    if (gwmirror::check_A2(cfg).passed && gwmirror::closed_form_check(cfg).passed) ++closed;
  }
  return {passed == 20 && closed == 5, std::to_string(passed) + "/20 configurations, " +
                                           std::to_string(closed) + "/5 closed forms (1+sum x)^t"};
}

Verdict closed_form_factorization() {
  int passed = 0;
  int built = 0;
  for (std::uint64_t seed = 0; built < 10; ++seed) {
    LemmaConfig cfg = gwmirror::sample_config(7000 + seed, 2 + built % 3, 5);
    // Mixed: at least one variable of each non-inert type.
    cfg.types[0] = VarType::kPower;
    cfg.types[1] = VarType::kFalling;
    cfg.c.assign(cfg.nvars(), BigRat(0));
    ++built;
    if (gwmirror::closed_form_check(cfg).passed) ++passed;
  }
  return {passed == 10, std::to_string(passed) + "/10 mixed configurations"};
}

Verdict spot_values() {
  const oracle::Poly quintic_direct = oracle::mul(
      oracle::linear_factors(5, 1, 5, 5), oracle::long_division_inverse(oracle::one_plus_h_power(5, 5)));
  const oracle::Poly p2_direct = oracle::mul(oracle::linear_factors(3, 0, 2, 3),
                                             oracle::long_division_inverse(oracle::one_plus_h_power(3, 3)));
  const auto naive = gwmirror::naive_series(4, 5, 1, gwmirror::ProductStart::kFromOne);
  const auto p2 = gwmirror::localp2_series(1);
  bool ok = true;
  for (std::size_t k = 0; k < 3; ++k) ok = ok && naive[1].coeff(k).raw() == quintic_direct[k];
  for (std::size_t k = 1; k < 3; ++k) ok = ok && p2[1].coeff(k).raw() == p2_direct[k];
  ok = ok && quintic_direct[0] == 120 && quintic_direct[1] == 770 && quintic_direct[2] == 575 &&
       p2_direct[1] == 6 && p2_direct[2] == 9;
  return {ok, "quintic d=1 (" + naive[1].coeff(0).to_string() + ", " + naive[1].coeff(1).to_string() +
                  ", " + naive[1].coeff(2).to_string() + "), local P2 d=1 (" +
                  p2[1].coeff(1).to_string() + ", " + p2[1].coeff(2).to_string() + ")"};
}

Verdict property_suites() {
  const auto results = props::all();
  std::size_t good = 0;
  std::string failures;
  for (const auto& r : results) {
    if (r.ok() && r.cases >= 100) {
      ++good;
    } else {
      failures += "; " + r.describe();
    }
  }
  return {good == results.size(),
          std::to_string(good) + "/" + std::to_string(results.size()) + " properties, >= 100 cases each" +
              failures};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "quintic reproduction", 1.0, quintic_reproduction},
      {2, "quintic cross-check", 10.0, quintic_crosscheck},
      {3, "local P2 table", 5.0, local_p2_table},
      {4, "ln P linear in t and z", 30.0, lemma_a1},
      {5, "ln Q linear in t", 0.0, lemma_a2},
      {6, "closed-form factorization", 0.0, closed_form_factorization},
      {7, "hypergeometric spot values", 0.0, spot_values},
      {8, "property suites", 0.0, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0.0 || secs < c.budget_seconds;
    const bool ok = v.ok && in_time;
    if (!ok) ++failed;
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << secs << "s";
    if (c.budget_seconds > 0.0) timing << " < " << std::defaultfloat << c.budget_seconds << "s";
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << v.detail << " ("
              << timing.str() << (in_time ? "" : ", over budget") << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
