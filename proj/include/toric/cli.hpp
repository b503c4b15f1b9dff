#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "toric/json_io.hpp"

namespace toric {

enum class Command { solve, curvature, validate, dim2, transform, demo };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int schema = 2;
inline constexpr int math = 3;
inline constexpr int validation = 4;
}  // namespace exit_code

struct Tolerances {
  std::optional<double> step_factor;
  std::optional<double> margin_fraction;
  std::optional<int> samples;
  std::optional<int> mesh;
};

struct JobSpec {
  Command command = Command::demo;
  /// Command input document; see README for the per-command fields.
  Json input = Json::object();
  std::optional<std::string> output;
  std::optional<std::string> csv;
  std::uint64_t seed = 20240607;
  Tolerances tolerances;
};

struct RunResult {
  int exit_code = exit_code::ok;
  Json report;
  /// Per-sample CSV for the curvature command, empty otherwise.
  std::string csv;
};

/// Runs a job without touching the filesystem. Errors become an "error"
/// object in the report together with the matching exit code.
RunResult run(const JobSpec& job);

/// Runs a job and writes the report (to `output` or stdout) and the CSV.
int run_and_write(const JobSpec& job);

/// Parses `source` as inline JSON when it starts with '{' or '[', otherwise
/// reads it as a file path. Throws SchemaError.
Json load_json(std::string_view source);

}  // namespace toric
