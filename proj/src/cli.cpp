#include "gwmirror/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwmirror/errors.hpp"
#include "gwmirror/lemma_lab.hpp"
#include "gwmirror/mirror.hpp"

namespace gwmirror::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void append_table(OutputRecord& record, const InvariantTable& table) {
  for (const InvariantEntry& e : table.entries) {
    record.rows.push_back({e.degree, {e.value.to_string()}});
  }
}

std::string pretty_title(const std::string& case_name) {
  static const std::map<std::string, std::string> titles = {
      {"quintic", "quintic threefold in P^4: n_d"},
      {"local-p2", "plane cubic, maximal tangency: I_{d,(3d)}(1)"},
      {"naive", "hypersurface 1-point classes I_d^Y (coefficients of H^0, H^1, ...)"},
  };
  auto it = titles.find(case_name);
  return it == titles.end() ? case_name : it->second;
}

}  // namespace

std::string render_json(const OutputRecord& record) {
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : record.params) params[key] = value;
  ordered_json entries = ordered_json::array();
  for (const auto& row : record.rows) {
    ordered_json entry;
    entry["d"] = row.d;
    if (record.value_is_vector) {
      entry["value"] = row.cells;
    } else {
      for (std::size_t c = 0; c < record.columns.size(); ++c) {
        entry[record.columns[c]] = row.cells[c];
      }
    }
    entries.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["case"] = record.case_name;
  doc["params"] = std::move(params);
  doc["entries"] = std::move(entries);
  doc["crosscheck"] = record.crosscheck;
  return doc.dump(2) + "\n";
}

std::string render_csv(const OutputRecord& record) {
  std::string out = "d";
  for (const auto& col : record.columns) out += "," + col;
  out += "\n";
  for (const auto& row : record.rows) {
    out += std::to_string(row.d);
    for (const auto& cell : row.cells) out += "," + cell;
    out += "\n";
  }
  return out;
}

std::string render_pretty(const OutputRecord& record) {
  std::ostringstream os;
  os << pretty_title(record.case_name);
  for (const auto& [key, value] : record.params) os << ", " << key << " = " << value;
  os << "\n";

  std::vector<std::size_t> width(record.columns.size() + 1, 1);
  width[0] = 1;
  for (std::size_t c = 0; c < record.columns.size(); ++c) width[c + 1] = record.columns[c].size();
  for (const auto& row : record.rows) {
    width[0] = std::max(width[0], std::to_string(row.d).size());
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      width[c + 1] = std::max(width[c + 1], row.cells[c].size());
    }
  }
  os << std::setw(static_cast<int>(width[0])) << "d";
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    os << "  " << std::setw(static_cast<int>(width[c + 1])) << record.columns[c];
  }
  os << "\n";
  for (const auto& row : record.rows) {
    os << std::setw(static_cast<int>(width[0])) << row.d;
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      os << "  " << std::setw(static_cast<int>(width[c + 1])) << row.cells[c];
    }
    os << "\n";
  }
  if (record.case_name == "quintic") os << "crosscheck: " << record.crosscheck << "\n";
  return os.str();
}

std::string render(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::kJson:
      return render_json(record);
    case Format::kCsv:
      return render_csv(record);
    case Format::kPretty:
      break;
  }
  return render_pretty(record);
}

OutputRecord quintic_record(std::size_t dmax, bool crosscheck) {
  OutputRecord record;
  record.case_name = "quintic";
  record.params = {{"dmax", static_cast<long>(dmax)}};
  record.columns = {"value"};
  if (crosscheck) {
    append_table(record, quintic_crosscheck(dmax));
    record.crosscheck = "ok";
  } else {
    append_table(record, quintic_invariants(dmax));
  }
  return record;
}

OutputRecord local_p2_record(std::size_t dmax, bool emit_kd) {
  OutputRecord record;
  record.case_name = "local-p2";
  record.params = {{"dmax", static_cast<long>(dmax)}};
  record.columns = {"value"};
  const InvariantTable relative = localp2_invariants(dmax);
  append_table(record, relative);
  if (emit_kd) {
    record.columns.push_back("kd");
    const InvariantTable kd = localp2_kd(relative);
    for (std::size_t i = 0; i < kd.entries.size(); ++i) {
      record.rows[i].cells.push_back(kd.entries[i].value.to_string());
    }
  }
  return record;
}

OutputRecord naive_record(unsigned ambient, unsigned degree, std::size_t dmax) {
  const std::vector<CohClass> classes = naive_invariants(ambient, degree, dmax);
  OutputRecord record;
  record.case_name = "naive";
  record.params = {{"ambient", ambient}, {"degree", degree}, {"dmax", static_cast<long>(dmax)}};
  record.value_is_vector = true;
  for (unsigned k = 0; k <= ambient; ++k) record.columns.push_back("h" + std::to_string(k));
  for (std::size_t d = 0; d < classes.size(); ++d) {
    OutputRecord::Row row{static_cast<unsigned>(d + 1), {}};
    for (const BigRat& c : classes[d].coeffs()) row.cells.push_back(c.to_string());
    record.rows.push_back(std::move(row));
  }
  return record;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const CLI::Validator at_least_one(
      [](std::string& input) -> std::string {
        try {
          std::size_t used = 0;
          if (std::stoll(input, &used) >= 1 && used == input.size()) return {};
        } catch (const std::exception&) {
        }
        return "must be an integer >= 1, got '" + input + "'";
      },
      "INT>=1");

  CLI::App app{"Exact genus-zero 1-point invariants of hypersurfaces via the mirror transformation", "gwmirror"};
  app.require_subcommand(1);

  const std::map<std::string, Format> format_names = {
      {"pretty", Format::kPretty}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  Format format = Format::kPretty;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: pretty, json, csv")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->option_text("pretty|json|csv");
    sub->add_option("--out", out_path, "Write the output to this file instead of stdout");
  };

  std::size_t quintic_dmax = 5;
  bool crosscheck = false;
  auto* quintic = app.add_subcommand("quintic", "n_d of the quintic threefold");
  quintic->add_option("--dmax", quintic_dmax, "Highest curve degree")->check(at_least_one);
  quintic->add_flag("--crosscheck", crosscheck, "Also run the mirror-map reversion route");
  add_common(quintic);

  std::size_t p2_dmax = 8;
  bool emit_kd = false;
  auto* local_p2 = app.add_subcommand("local-p2", "Relative invariants I_{d,(3d)}(1) of a plane cubic");
  local_p2->add_option("--dmax", p2_dmax, "Highest curve degree")->check(at_least_one);
  local_p2->add_flag("--emit-kd", emit_kd, "Add the K_d = (-1)^d I_d / (3d) column");
  add_common(local_p2);

  unsigned ambient = 0;
  unsigned degree = 0;
  std::size_t naive_dmax = 5;
  auto* naive = app.add_subcommand("naive", "I_d^Y for hypersurfaces of degree <= n-1 in P^n");
  naive->add_option("--ambient", ambient, "n of the ambient P^n")->required();
  naive->add_option("--degree", degree, "Hypersurface degree l")->required()->check(at_least_one);
  naive->add_option("--dmax", naive_dmax, "Highest curve degree")->check(at_least_one);
  add_common(naive);

  std::string lemma_name;
  std::size_t vars = 2;
  unsigned xdeg = 4;
  unsigned trials = 20;
  std::uint64_t seed = 1;
  auto* lemma = app.add_subcommand("lemma", "Check the log-linearity lemmas on sampled configurations");
  lemma->add_option("lemma", lemma_name, "a1 or a2")->required()->check(CLI::IsMember({"a1", "a2"}));
  lemma->add_option("--vars", vars, "Number of x variables");
  lemma->add_option("--xdeg", xdeg, "Truncation order in x")->check(at_least_one);
  lemma->add_option("--trials", trials, "Number of sampled configurations")->check(at_least_one);
  lemma->add_option("--seed", seed, "Seed of the first trial");
  lemma->add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  auto emit = [&](const std::string& text) -> int {
    if (out_path.empty()) {
      out << text;
      return kOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    return kOk;
  };

  try {
    if (*quintic) return emit(render(quintic_record(quintic_dmax, crosscheck), format));
    if (*local_p2) return emit(render(local_p2_record(p2_dmax, emit_kd), format));
    if (*naive) {
      if (ambient < 2 || degree + 1 > ambient) {
        err << "error: the naive formula needs 1 <= degree <= ambient - 1 (correction terms "
               "vanish only for hypersurfaces of degree at most n-1 in P^n); got degree "
            << degree << " in P^" << ambient << "\n";
        return kUsage;
      }
      return emit(render(naive_record(ambient, degree, naive_dmax), format));
    }
    if (*lemma) {
      const LemmaKind kind = lemma_name == "a1" ? LemmaKind::kA1 : LemmaKind::kA2;
      const auto outcomes = run_lemma_trials(kind, vars, xdeg, trials, seed);
      std::string report;
      std::size_t passed = 0;
      for (const auto& trial : outcomes) {
        report += trial.line() + "\n";
        if (trial.report.passed) ++passed;
      }
      report += lemma_name + ": " + std::to_string(passed) + "/" + std::to_string(outcomes.size()) +
                " trials passed\n";
      const int written = emit(report);
      if (written != kOk) return written;
      return passed == outcomes.size() ? kOk : kConsistencyFailure;
    }
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kConsistencyFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gwmirror::cli
