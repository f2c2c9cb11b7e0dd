#include "malle/report/commands.hpp"

#include <cstdio>
#include <set>
#include <variant>

#include "malle/error.hpp"
#include "malle/invariants.hpp"
#include "malle/report/cycle_notation.hpp"
#include "malle/series.hpp"
#include "malle/subgroups.hpp"

namespace malle::report {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

json perm_list(const std::vector<Permutation>& ps) {
  json j = json::array();
  for (const auto& p : ps) j.push_back(print_cycles(p));
  return j;
}

json class_json(const ClassPartition& classes, std::size_t id) {
  const auto& c = classes[id];
  return {{"id", id}, {"representative", print_cycles(c.representative)}, {"size", c.size()}, {"index", c.index}};
}

json block_json(const ClassPartition& classes, const OrbitBlock& blk) {
  json reps = json::array();
  for (std::size_t id : blk.classes) reps.push_back(print_cycles(classes[id].representative));
  return {{"classes", reps}, {"size", blk.size}, {"index", blk.index}, {"weight", blk.weight}};
}

json big_list(const std::vector<BigInt>& values) {
  json j = json::array();
  for (const auto& v : values) j.push_back(to_string(v));
  return j;
}

json class_vector_json(const ClassVector& cv, const ClassPartition& classes) {
  json j = json::array();
  for (const auto& [id, m] : cv.multiplicities) {
    json c = class_json(classes, id);
    c["multiplicity"] = m;
    j.push_back(c);
  }
  return j;
}

std::uint64_t require_q(const CommandOptions& o) {
  if (!o.q) throw Error(ErrorCode::InvalidArgument, "--q is required for '" + o.command + "'");
  return *o.q;
}

struct Session {
  LoadedGroup group;
  json warnings = json::array();
};

json context_inputs(const GNContext& ctx) {
  json in;
  in["degree"] = ctx.n.degree();
  in["order_N"] = ctx.n.order();
  in["order_G"] = ctx.g.order();
  in["d"] = ctx.d;
  in["d_prime"] = ctx.d_prime;
  in["d_double_prime"] = ctx.d_double_prime;
  in["split"] = ctx.split;
  in["tau"] = ctx.tau ? json(print_cycles(*ctx.tau)) : json(nullptr);
  in["coset_generator"] = print_cycles(ctx.coset_generator);
  return in;
}

void nonsplit_warning(const GNContext& ctx, json& warnings) {
  if (ctx.split) return;
  warnings.push_back("G is not split in N: no cyclic complement exists, so the coset generator " +
                     print_cycles(ctx.coset_generator) +
                     " stands in for tau and the result lies outside the proven split case");
}

// --- invariants -----------------------------------------------------------

json cmd_invariants(const CommandOptions& o, Session& s, json& inputs) {
  const std::uint64_t q = require_q(o);
  const GNContext ctx = find_cyclic_complement(s.group.n, s.group.subgroup(o.normal));
  inputs.update(context_inputs(ctx));
  inputs["q"] = q;
  nonsplit_warning(ctx, s.warnings);

  const auto pred = asymptotic_prediction(ctx, q, /*allow_nonsplit=*/true);
  json out;
  out["a"] = to_string(pred.a);
  out["b"] = pred.b;
  out["asymptotic"] = pred.formula;
  out["argmax_e"] = pred.detail.argmax_e;
  out["outside_hypothesis"] = pred.detail.outside_hypothesis;
  json minimal = json::array();
  for (std::size_t id : minimal_index_classes(ctx.g_classes)) minimal.push_back(class_json(ctx.g_classes, id));
  out["minimal_classes"] = minimal;
  json table = json::array();
  for (const auto& [e, value] : pred.detail.per_e) {
    if (o.e && *o.e != e) continue;
    json blocks = json::array();
    for (const auto& blk : orbit_blocks(TwistSpec::make(ctx, q, e), true)) blocks.push_back(block_json(ctx.g_classes, blk));
    table.push_back({{"e", e}, {"b_e", value}, {"blocks", blocks}});
  }
  if (o.e && table.empty())
    throw Error(ErrorCode::InvalidTwist, "e = " + std::to_string(*o.e) + " is not admissible");
  out["b_e"] = table;
  return out;
}

// --- conjecture -----------------------------------------------------------

json cmd_conjecture(const CommandOptions& o, Session& s, json& inputs) {
  const FiniteGroup& n = s.group.n;
  FieldSpec field;
  if (o.level) {
    RationalNumberField f;
    f.modulus = *o.level;
    field = f;
    inputs["field"] = "Q";
    inputs["level"] = *o.level;
  } else {
    field = FunctionField{require_q(o)};
    inputs["field"] = "F_q";
    inputs["q"] = *o.q;
  }
  QuotientFilter filter;
  if (o.filter == "abelian") filter = QuotientFilter::Abelian;
  else if (o.filter == "cyclic") filter = QuotientFilter::Cyclic;
  else throw Error(ErrorCode::InvalidArgument, "--filter must be 'abelian' or 'cyclic'");
  inputs["filter"] = o.filter;
  inputs["degree"] = n.degree();
  inputs["order_N"] = n.order();

  const auto rep = revised_b(n, field, filter);
  json rows = json::array();
  bool any_nonsplit = false;
  for (const auto& row : rep.rows) {
    json r;
    r["order"] = row.g.order();
    r["generators"] = perm_list(row.g.generators());
    r["a"] = to_string(row.a);
    r["quotient_abelian"] = row.quotient_abelian;
    r["quotient_cyclic"] = row.quotient_cyclic;
    r["split"] = row.split;
    r["included"] = row.included;
    r["b"] = row.b ? json(*row.b) : json(nullptr);
    r["note"] = row.note;
    for (const auto& [name, sub] : s.group.subgroups)
      if (sub == row.g) r["name"] = name;
    if (row.g == n) r["name"] = "N";
    if (!row.split && row.quotient_cyclic && row.a == rep.a) any_nonsplit = true;
    rows.push_back(r);
  }
  if (any_nonsplit && std::holds_alternative<FunctionField>(field))
    s.warnings.push_back("non-split subgroups with a(G) = a(N) were skipped");
  json out;
  out["a"] = to_string(rep.a);
  out["b"] = rep.b;
  out["asymptotic"] = render_asymptotic(rep.a, rep.b);
  out["subgroups"] = rows;
  return out;
}

// --- braid ----------------------------------------------------------------

json cmd_braid(const CommandOptions& o, Session& s, json& inputs) {
  if (!o.classes) throw Error(ErrorCode::InvalidArgument, "--classes is required for 'braid'");
  const FiniteGroup& g = s.group.subgroup(o.normal);
  const NielsenSpace space(g, s.group.n);
  const ClassVector cv = parse_class_vector(*o.classes, space.classes());
  inputs["degree"] = g.degree();
  inputs["order_N"] = s.group.n.order();
  inputs["order_G"] = g.order();
  inputs["classes"] = *o.classes;

  const auto dec = braid_orbits(space, cv);
  json out;
  out["class_vector"] = class_vector_json(cv, space.classes());
  out["length"] = cv.length();
  out["weight"] = cv.weight(space.classes());
  out["tuple_count"] = dec.tuple_count;
  out["class_count"] = dec.class_count;
  out["orbit_count"] = dec.orbits.size();
  json orbits = json::array();
  for (const auto& orb : dec.orbits)
    orbits.push_back({{"size", orb.size}, {"canonical_rep", perm_list(orb.canonical_rep.entries)}});
  out["orbits"] = orbits;

  if (o.q) {
    const GNContext ctx = find_cyclic_complement(s.group.n, g);
    nonsplit_warning(ctx, s.warnings);
    const auto spec = TwistSpec::make(ctx, *o.q, o.e.value_or(1));
    inputs["q"] = *o.q;
    inputs["e"] = spec.e;
    const NielsenSpace gspace(g, g);
    const auto gdec = braid_orbits(gspace, cv);
    out["stable_orbits"] = frobenius_stable_orbits(gspace, gdec, spec);
    out["g_orbit_count"] = gdec.orbits.size();
    s.warnings.push_back("stable_orbits uses the entrywise twisted-power model of the Frobenius action, "
                         "on tuples up to G-conjugation");
  }
  return out;
}

// --- series ---------------------------------------------------------------

json fit_json(const FitSummary& fit) {
  json j;
  j["a"] = to_string(fit.a);
  j["b"] = fit.b;
  j["stride"] = fit.stride;
  j["min_ratio"] = fmt_double(fit.min_ratio);
  j["max_ratio"] = fmt_double(fit.max_ratio);
  j["spread"] = fmt_double(fit.spread);
  j["unaligned_spread"] = fmt_double(fit.unaligned_spread);
  j["window"] = fmt_double(fit.window);
  j["bounded"] = fit.bounded;
  json cps = json::array();
  for (const auto& c : fit.checkpoints)
    cps.push_back({{"R", c.R}, {"partial_sum", to_string(c.partial_sum)}, {"ratio", fmt_double(c.ratio)}});
  j["checkpoints"] = cps;
  return j;
}

json cmd_series(const CommandOptions& o, Session& s, json& inputs) {
  const std::uint64_t q = require_q(o);
  const GNContext ctx = find_cyclic_complement(s.group.n, s.group.subgroup(o.normal));
  nonsplit_warning(ctx, s.warnings);
  const auto spec = TwistSpec::make(ctx, q, o.e.value_or(1));
  const std::size_t R = o.terms.value_or(40);
  inputs.update(context_inputs(ctx));
  inputs["q"] = q;
  inputs["e"] = spec.e;
  inputs["terms"] = R;

  const auto blocks = orbit_blocks(spec, false);
  const auto gf = euler_product(blocks, q);
  const auto table = expand(gf, R);
  const auto oracle = brute_force_h3(blocks, q, R);
  const auto pole = dominant_pole(gf);

  json out;
  json factors = json::array();
  for (const auto& f : gf.factors)
    factors.push_back({{"coefficient_exponent", f.coefficient_exponent}, {"variable_exponent", f.variable_exponent}});
  out["factors"] = factors;
  out["coefficients"] = big_list(table.values);
  out["brute_force_match"] = table.values == oracle.values;
  out["pole"] = {{"a", to_string(pole.a)},
                 {"b", pole.b},
                 {"dominant_radius", fmt_double(pole.dominant_radius)},
                 {"period", pole.period},
                 {"equal_modulus_poles", pole.equal_modulus_poles}};
  if (pole.equal_modulus_poles > 0)
    s.warnings.push_back(std::to_string(pole.equal_modulus_poles) +
                         " further poles share the dominant modulus; only the positive real pole is analysed");
  if (R >= FitOptions{}.min_terms) {
    out["fit"] = fit_json(tauberian_fit(table, pole));
  } else {
    s.warnings.push_back("fewer than 40 terms: tauberian fit skipped");
  }

  if (o.desk_scale) {
    const auto desk = h2_desk_scale(spec, *o.desk_scale);
    json d;
    d["h2"] = big_list(desk.h2);
    d["h3"] = big_list(desk.h3);
    d["complete"] = desk.complete;
    d["high_water_mark"] = desk.high_water_mark;
    d["class_vectors"] = desk.class_vectors;
    d["max_orbit_count"] = desk.max_orbit_count;
    if (desk.complete) {
      const auto pm = prop_main_check(desk.h2, desk.h3, *o.desk_scale + 1);
      d["prop_main"] = {{"m", pm.m ? json(*pm.m) : json(nullptr)},
                        {"c1", to_string(pm.c1)},
                        {"violation", pm.violation},
                        {"notes", pm.notes}};
    } else {
      s.warnings.push_back("desk-scale table stopped at the enumeration caps");
    }
    out["desk_scale"] = d;
    s.warnings.push_back("h2 counts braid orbits fixed by the entrywise twisted-power model and assumes "
                         "q^dim rational points per connected component");
  }
  return out;
}

// --- verify ---------------------------------------------------------------

const GroupSpecFile& preset_group(const Preset& p, const json& check) {
  const std::string name = check.value("group", std::string("main"));
  auto it = p.groups.find(name);
  if (it == p.groups.end()) throw Error(ErrorCode::InvalidArgument, "preset has no group '" + name + "'");
  return it->second;
}

json check_pair(const LoadedGroup& lg, const json& check) {
  const auto ctx = find_cyclic_complement(lg.n, lg.subgroup(check.at("subgroup").get<std::string>()));
  const auto pred = asymptotic_prediction(ctx, check.at("q").get<std::uint64_t>(), true);
  return {{"a", to_string(pred.a)}, {"b", pred.b}, {"asymptotic", pred.formula}, {"split", ctx.split}};
}

json check_aggregate(const LoadedGroup& lg, const json& check) {
  const auto rep = revised_b(lg.n, FunctionField{check.at("q").get<std::uint64_t>()});
  return {{"a", to_string(rep.a)}, {"b", rep.b}, {"asymptotic", render_asymptotic(rep.a, rep.b)}};
}

json check_number_field(const LoadedGroup& lg, const json& check) {
  RationalNumberField f;
  f.modulus = check.at("level").get<std::uint64_t>();
  const auto rep = revised_b(lg.n, f);
  return {{"a", to_string(rep.a)}, {"b", rep.b}};
}

json check_series(const LoadedGroup& lg, const json& check) {
  const auto ctx = find_cyclic_complement(lg.n, lg.subgroup(check.at("subgroup").get<std::string>()));
  const std::uint64_t q = check.at("q").get<std::uint64_t>();
  const std::size_t R = check.at("terms").get<std::size_t>();
  const auto spec = TwistSpec::make(ctx, q, check.value("e", std::size_t{1}));
  const auto blocks = orbit_blocks(spec, false);
  const auto gf = euler_product(blocks, q);
  const auto table = expand(gf, R);
  const auto pole = dominant_pole(gf);
  const auto fit = tauberian_fit(table, pole);
  return {{"a", to_string(pole.a)},
          {"b", pole.b},
          {"brute_force_match", table.values == brute_force_h3(blocks, q, R).values},
          {"bounded", fit.bounded},
          {"spread", fmt_double(fit.spread)}};
}

json check_abelian(const LoadedGroup& lg, const json& check) {
  const FiniteGroup& n = lg.n;
  std::size_t comparisons = 0, violations = 0;
  json detail = json::array();
  const Rational an = a_invariant(n);
  for (std::uint64_t q : prime_powers_coprime_to(n.order(), check.at("q_bound").get<std::uint64_t>())) {
    const std::size_t bnn = b_constant(find_cyclic_complement(n, n), q).b;
    for (const auto& g : normal_subgroups_with_cyclic_quotient(n)) {
      if (g.is_trivial() || g == n || a_invariant(g) != an) continue;
      const auto ctx = find_cyclic_complement(n, g);
      if (!ctx.split) continue;
      const std::size_t bg = b_constant(ctx, q).b;
      ++comparisons;
      if (bg > bnn) {
        ++violations;
        detail.push_back({{"q", q}, {"G", perm_list(g.generators())}, {"b_G", bg}, {"b_N", bnn}});
      }
    }
  }
  return {{"comparisons", comparisons}, {"violations", violations}, {"violating", detail}};
}

json check_braid(const LoadedGroup& lg, const json& check) {
  const NielsenSpace space(lg.n, lg.n);
  const auto dec = braid_orbits(space, parse_class_vector(check.at("classes").get<std::string>(), space.classes()));
  return {{"orbit_count", dec.orbits.size()}, {"tuple_count", dec.tuple_count}, {"class_count", dec.class_count}};
}

json check_probe(const LoadedGroup& lg, const json& check) {
  const NielsenSpace space(lg.n, lg.n);
  const auto base = parse_class_vector(check.at("base").get<std::string>(), space.classes());
  const auto pad = parse_class_vector(check.at("pad").get<std::string>(), space.classes());
  const auto points = conway_parker_probe(space, base, pad, check.at("max_m").get<std::size_t>());
  json counts = json::array();
  std::set<std::size_t> nonempty;
  bool complete = true;
  for (const auto& p : points) {
    counts.push_back({{"m", p.m}, {"orbit_count", p.orbit_count}, {"class_count", p.class_count}, {"complete", p.complete}});
    if (p.complete && p.class_count > 0) nonempty.insert(p.orbit_count);
    complete = complete && p.complete;
  }
  json summary = nonempty.size() == 1 ? json(*nonempty.begin()) : json(std::vector<std::size_t>(nonempty.begin(), nonempty.end()));
  return {{"points", counts}, {"orbit_count_when_nonempty", summary}, {"complete", complete}};
}

json check_prop_main(const LoadedGroup& lg, const json& check) {
  const auto ctx = find_cyclic_complement(lg.n, lg.subgroup(check.value("subgroup", std::string("N"))));
  const auto spec = TwistSpec::make(ctx, check.at("q").get<std::uint64_t>(), check.value("e", std::size_t{1}));
  const auto rep = prop_main_check(spec, check.at("terms").get<std::size_t>());
  return {{"m", rep.m ? json(*rep.m) : json(nullptr)}, {"c1", to_string(rep.c1)}, {"violation", rep.violation}};
}

json cmd_verify(const CommandOptions& o, Session&, json& inputs, bool& mismatch) {
  if (!o.preset) throw Error(ErrorCode::InvalidArgument, "verify needs --preset");
  const Preset& p = find_preset(*o.preset);
  inputs["preset"] = p.name;
  json results = json::array();
  std::size_t failed = 0;
  for (const auto& check : p.checks) {
    json r = run_check(p, check);
    if (!r["pass"].get<bool>()) ++failed;
    results.push_back(std::move(r));
  }
  mismatch = failed > 0;
  return {{"description", p.description}, {"checks", results}, {"failed", failed}, {"passed", failed == 0}};
}

}  // namespace

ClassVector parse_class_vector(const std::string& text, const ClassPartition& classes) {
  ClassVector cv;
  const std::size_t degree = classes.group().degree();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    std::size_t mult = 1;
    const std::size_t star = item.rfind('*');
    if (star != std::string::npos) {
      const std::string count = item.substr(star + 1);
      std::size_t used = 0;
      try {
        mult = std::stoul(count, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || count.find_first_not_of(" \t0123456789") != std::string::npos)
        throw Error(ErrorCode::ParseError, "at position " + std::to_string(start + star + 1) + ": bad multiplicity");
      item = item.substr(0, star);
    }
    if (item.find_first_not_of(" \t") == std::string::npos)
      throw Error(ErrorCode::ParseError, "at position " + std::to_string(start) + ": empty class entry");
    const std::size_t id = classes.class_of(parse_cycles(item, degree));
    if (classes[id].trivial) throw Error(ErrorCode::TrivialClassPresent, "class vector names the identity");
    if (mult) cv.multiplicities[id] += mult;
    start = end + 1;
  }
  return cv;
}

json run_check(const Preset& preset, const json& check) {
  json result = check;
  result.erase("expect");
  const json& expected = check.at("expect");
  result["expected"] = expected;
  json actual;
  try {
    const LoadedGroup lg = load_group(preset_group(preset, check));
    const std::string kind = check.at("kind").get<std::string>();
    if (kind == "pair") actual = check_pair(lg, check);
    else if (kind == "aggregate") actual = check_aggregate(lg, check);
    else if (kind == "number_field") actual = check_number_field(lg, check);
    else if (kind == "series") actual = check_series(lg, check);
    else if (kind == "abelian_comparison") actual = check_abelian(lg, check);
    else if (kind == "braid") actual = check_braid(lg, check);
    else if (kind == "probe") actual = check_probe(lg, check);
    else if (kind == "prop_main") actual = check_prop_main(lg, check);
    else throw Error(ErrorCode::InvalidArgument, "unknown check kind '" + kind + "'");
  } catch (const Error& e) {
    actual = {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
  }
  bool pass = true;
  for (const auto& [key, value] : expected.items())
    if (!actual.contains(key) || actual[key] != value) pass = false;
  result["actual"] = actual;
  result["pass"] = pass;
  return result;
}

CommandResult run_command(const CommandOptions& o) {
  CommandResult res;
  json report;
  report["schema_version"] = kSchemaVersion;
  json cmd = {{"name", o.command}, {"normal", o.normal}};
  if (o.group_file) cmd["group"] = *o.group_file;
  if (o.preset) cmd["preset"] = *o.preset;
  report["command"] = cmd;
  Session s;
  json inputs = json::object();
  try {
    bool mismatch = false;
    json outputs;
    if (o.command == "verify") {
      outputs = cmd_verify(o, s, inputs, mismatch);
    } else {
      if (o.group_file) s.group = load_group(read_group_spec(*o.group_file));
      else if (o.preset) s.group = load_group(find_preset(*o.preset).groups.at("main"));
      else throw Error(ErrorCode::InvalidArgument, "--group <file> or --preset <name> is required");
      if (o.command == "invariants") outputs = cmd_invariants(o, s, inputs);
      else if (o.command == "conjecture") outputs = cmd_conjecture(o, s, inputs);
      else if (o.command == "braid") outputs = cmd_braid(o, s, inputs);
      else if (o.command == "series") outputs = cmd_series(o, s, inputs);
      else throw Error(ErrorCode::InvalidArgument, "unknown command '" + o.command + "'");
    }
    report["outputs"] = outputs;
    res.exit_code = mismatch ? kExitGoldenMismatch : kExitOk;
  } catch (const Error& e) {
    report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    res.exit_code = is_validation_error(e.code()) ? kExitValidation : kExitComputation;
  } catch (const std::exception& e) {
    report["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    res.exit_code = kExitComputation;
  }
  report["inputs"] = inputs;
  report["warnings"] = s.warnings;
  res.report = std::move(report);
  return res;
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace malle::report
