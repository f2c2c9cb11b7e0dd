#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "malle/conjugacy.hpp"
#include "malle/nielsen.hpp"
#include "malle/report/presets.hpp"

namespace malle::report {

enum ExitCode : int {
  kExitOk = 0,
  kExitComputation = 1,
  kExitValidation = 2,
  kExitGoldenMismatch = 3,
};

struct CommandOptions {
  std::string command;  // invariants | conjecture | braid | series | verify
  std::optional<std::string> group_file;
  std::optional<std::string> preset;
  std::string normal = "N";  // named subgroup playing G
  std::optional<std::uint64_t> q;
  std::optional<std::size_t> e;
  std::optional<std::string> classes;  // braid class vector
  std::optional<std::size_t> terms;  // series length R
  std::optional<std::uint64_t> level;  // cyclotomic level M; selects the number-field case
  std::string filter = "abelian";  // conjecture: abelian | cyclic
  std::optional<std::size_t> desk_scale;  // series: also tabulate h2 up to this weight
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

/// Never throws for library errors: they become {"error": {...}} reports
/// with exit code 1 (computation) or 2 (validation).
CommandResult run_command(const CommandOptions& options);

/// Sorted keys, two-space indent, trailing newline.
std::string serialize_report(const nlohmann::json& report);

/// "(1 2)*4;(1 2 3)": representatives of G-classes with multiplicities.
/// Throws ParseError, NotASubgroup, TrivialClassPresent.
ClassVector parse_class_vector(const std::string& text, const ClassPartition& classes);

/// Runs one preset check; returns {"kind", ..., "expected", "actual", "pass"}.
nlohmann::json run_check(const Preset& preset, const nlohmann::json& check);

}  // namespace malle::report
