#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "malle/report/commands.hpp"

namespace rep = malle::report;

int main(int argc, char** argv) {
  CLI::App app{"malle-lab: Malle-type invariants, braid orbits and counting series for permutation groups"};
  rep::CommandOptions opt;
  std::string out_path;
  std::string group_file, preset, classes;
  std::uint64_t q = 0, level = 0;
  std::size_t e = 0, terms = 0, desk = 0;

  app.add_option("command", opt.command, "invariants | conjecture | braid | series | verify | presets")
      ->required()
      ->check(CLI::IsMember({"invariants", "conjecture", "braid", "series", "verify", "presets"}));
  auto* o_group = app.add_option("--group", group_file, "group file (JSON)");
  auto* o_preset = app.add_option("--preset", preset, "named scenario; also supplies the group");
  app.add_option("--normal", opt.normal, "named subgroup used as G (default: N)");
  auto* o_q = app.add_option("--q", q, "prime power coprime to |N|");
  auto* o_e = app.add_option("--e", e, "twist type, 1 <= e <= d' with gcd(e, d') = 1");
  auto* o_classes = app.add_option("--classes", classes, "class vector, e.g. \"(1 2)*4;(1 2 3)\"");
  auto* o_terms = app.add_option("--terms", terms, "series length R (default 40)");
  auto* o_level = app.add_option("--level", level, "cyclotomic level M: switches 'conjecture' to k = Q");
  app.add_option("--filter", opt.filter, "conjecture quotient filter: abelian | cyclic");
  auto* o_desk = app.add_option("--desk-scale", desk, "series: also tabulate h2 up to this weight");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : rep::kExitValidation;
  }

  if (opt.command == "presets") {
    for (const auto& p : rep::presets()) std::cout << p.name << "\t" << p.description << "\n";
    return rep::kExitOk;
  }

  if (*o_group) opt.group_file = group_file;
  if (*o_preset) opt.preset = preset;
  if (*o_q) opt.q = q;
  if (*o_e) opt.e = e;
  if (*o_classes) opt.classes = classes;
  if (*o_terms) opt.terms = terms;
  if (*o_level) opt.level = level;
  if (*o_desk) opt.desk_scale = desk;

  const auto result = rep::run_command(opt);
  const std::string text = rep::serialize_report(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return rep::kExitComputation;
    }
    out << text;
  }
  if (result.report.contains("error"))
    std::cerr << "error: " << result.report["error"]["code"].get<std::string>() << ": "
              << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
