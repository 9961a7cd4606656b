#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jumploci {

enum class Command { linking, dims, scan, verify_deletion, corpus };
enum class Format { table, json };

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;   // verification failure or linking disagreement
inline constexpr int kExitInvalid = 2;  // parse / validation error
inline constexpr int kExitBudget = 3;   // budget refusal

struct JobSpec {
  Command command = Command::corpus;
  std::optional<std::string> corpus_name;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  std::optional<std::string> character;   // "0,1/3"
  std::optional<std::int64_t> order;
  std::optional<int> degree;
  std::optional<std::size_t> multiplicity;
  std::vector<std::size_t> deleted;       // 1-based, as typed
  Format format = Format::table;
  std::optional<std::size_t> budget;      // falls back to $JUMPLOCI_BUDGET, then the default
  std::size_t jobs = 0;
  std::optional<std::string> output_path;
};

/// Validates the job, dispatches it and writes the report to `out` (or to
/// the output file). Diagnostics go to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace jumploci
