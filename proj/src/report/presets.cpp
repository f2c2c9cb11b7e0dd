#include "malle/report/presets.hpp"

#include <string>

#include "malle/error.hpp"

namespace malle::report {

using nlohmann::json;

namespace {

GroupSpecFile klueners_group() {
  GroupSpecFile g;
  g.degree = 6;
  g.generators = {"(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"};
  g.named_subgroups["G1"] = {"(1 2 3)", "(4 5 6)"};
  g.named_subgroups["G2"] = {"(1 2 3)(4 5 6)"};
  // the order-3 normal subgroup whose quotient is cyclic
  g.named_subgroups["G2c"] = {"(1 2 3)(4 6 5)"};
  return g;
}

// points (i, j) -> i + 9j + 1, i in 0..8, j in 0..1
GroupSpecFile wreath_group() {
  const std::string g1 = "(1 2 3)(10 11 12)";
  const std::string g2 = "(4 5 6)(13 14 15)";
  const std::string g3 = "(7 8 9)(16 17 18)";
  const std::string x = "(1 4 7)(2 5 8)(3 6 9)(10 13 16)(11 14 17)(12 15 18)";
  const std::string y = "(1 10)(2 11)(3 12)(4 13)(5 14)(6 15)(7 16)(8 17)(9 18)";
  GroupSpecFile g;
  g.degree = 18;
  g.generators = {g1, g2, g3, x, y};
  g.named_subgroups["wreath"] = {g1, x};
  g.named_subgroups["base"] = {g1, g2, g3};
  g.named_subgroups["base_y"] = {g1, g2, g3, y};
  return g;
}

GroupSpecFile make_group(std::size_t degree, std::vector<std::string> gens) {
  GroupSpecFile g;
  g.degree = degree;
  g.generators = std::move(gens);
  return g;
}

std::vector<Preset> build() {
  std::vector<Preset> out;

  {
    Preset p;
    p.name = "klueners-s6";
    p.description = "(C3 x C3) : C2 in S6 over F_q, q = 2 mod 3";
    p.groups["main"] = klueners_group();
    for (int q : {5, 11}) {
      p.checks.push_back({{"kind", "pair"}, {"subgroup", "G1"}, {"q", q},
                          {"expect", {{"a", "1/2"}, {"b", 2}, {"asymptotic", "X^{1/2} log X"}}}});
      p.checks.push_back({{"kind", "pair"}, {"subgroup", "N"}, {"q", q},
                          {"expect", {{"a", "1/2"}, {"b", 1}, {"asymptotic", "X^{1/2}"}}}});
      p.checks.push_back({{"kind", "pair"}, {"subgroup", "G2"}, {"q", q},
                          {"expect", {{"a", "1/4"}, {"b", 1}, {"asymptotic", "X^{1/4}"}}}});
      p.checks.push_back({{"kind", "aggregate"}, {"q", q},
                          {"expect", {{"a", "1/2"}, {"b", 2}, {"asymptotic", "X^{1/2} log X"}}}});
    }
    p.checks.push_back({{"kind", "series"}, {"subgroup", "G1"}, {"q", 5}, {"terms", 60},
                        {"expect", {{"a", "1/2"}, {"b", 2}, {"brute_force_match", true}, {"bounded", true}}}});
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "wreath-s18";
    p.description = "(C3 wr C3) x C2 in S18 and its normal subgroups with cyclic quotient";
    p.groups["main"] = wreath_group();
    for (int q : {5, 11}) {
      for (const char* sub : {"N", "wreath", "base", "base_y"})
        p.checks.push_back({{"kind", "pair"}, {"subgroup", sub}, {"q", q},
                            {"expect", {{"a", "1/4"}, {"b", 1}, {"asymptotic", "X^{1/4}"}}}});
      p.checks.push_back({{"kind", "aggregate"}, {"q", q},
                          {"expect", {{"a", "1/4"}, {"b", 1}, {"asymptotic", "X^{1/4}"}}}});
    }
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "abelian-suite";
    p.description = "regular abelian groups: b(G,N,q) <= b(N,N,q)";
    p.groups["main"] = make_group(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    p.groups["C4"] = make_group(4, {"(1 2 3 4)"});
    p.groups["C6"] = make_group(6, {"(1 2 3 4 5 6)"});
    p.groups["C3xC3"] = make_group(9, {"(1 2 3)(4 5 6)(7 8 9)", "(1 4 7)(2 5 8)(3 6 9)"});
    for (const char* name : {"main", "C4", "C6", "C3xC3"})
      p.checks.push_back({{"kind", "abelian_comparison"}, {"group", name}, {"q_bound", 50},
                          {"expect", {{"violations", 0}}}});
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "s3-clebsch";
    p.description = "braid orbits of transposition tuples in S3";
    p.groups["main"] = make_group(3, {"(1 2)", "(1 2 3)"});
    p.checks.push_back({{"kind", "braid"}, {"classes", "(1 2)*4"},
                        {"expect", {{"orbit_count", 1}, {"tuple_count", 24}, {"class_count", 4}}}});
    p.checks.push_back({{"kind", "braid"}, {"classes", "(1 2)*2;(1 2 3)"},
                        {"expect", {{"orbit_count", 1}}}});
    p.checks.push_back({{"kind", "probe"}, {"base", "(1 2)*4"}, {"pad", "(1 2);(1 2 3)"}, {"max_m", 3},
                        {"expect", {{"orbit_count_when_nonempty", 1}}}});
    p.checks.push_back({{"kind", "prop_main"}, {"q", 7}, {"terms", 12}, {"expect", {{"violation", false}}}});
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.name = "klueners-q";
    p.description = "the S6 example over Q at cyclotomic level 3";
    p.groups["main"] = klueners_group();
    p.checks.push_back({{"kind", "number_field"}, {"level", 3}, {"expect", {{"b", 2}}}});
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

}  // namespace malle::report
