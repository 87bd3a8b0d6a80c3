#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gwmirror::cli {

enum ExitCode : int { kOk = 0, kConsistencyFailure = 1, kUsage = 2 };

enum class Format { kPretty, kJson, kCsv };

/// One command's result, with every value already in canonical rational form.
struct OutputRecord {
  struct Row {
    unsigned d;
    std::vector<std::string> cells;  // one per column
  };

  std::string case_name;
  std::vector<std::pair<std::string, long>> params;
  std::vector<std::string> columns;
  // JSON emits the cells of a row as one "value" array (cohomology classes)
  // instead of one field per column.
  bool value_is_vector = false;
  std::vector<Row> rows;
  std::string crosscheck = "absent";
};

std::string render_json(const OutputRecord& record);
std::string render_csv(const OutputRecord& record);
std::string render_pretty(const OutputRecord& record);
std::string render(const OutputRecord& record, Format format);

OutputRecord quintic_record(std::size_t dmax, bool crosscheck);
OutputRecord local_p2_record(std::size_t dmax, bool emit_kd);
OutputRecord naive_record(unsigned ambient, unsigned degree, std::size_t dmax);

/// Parses args (without the program name), runs the subcommand, and returns the
/// process exit code. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwmirror::cli
