// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is 0 once every criterion has been evaluated; pass --strict to
// get a nonzero status when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "malle/error.hpp"
#include "malle/invariants.hpp"
#include "malle/nielsen.hpp"
#include "malle/report/cycle_notation.hpp"
#include "malle/report/group_spec.hpp"
#include "malle/report/presets.hpp"
#include "malle/series.hpp"
#include "malle/subgroups.hpp"

using namespace malle;
using malle::report::load_group;
using malle::report::parse_cycles;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // shown on the result line
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

FiniteGroup preset_n(const char* preset, const char* group = "main") {
  return load_group(report::find_preset(preset).groups.at(group)).n;
}

FiniteGroup preset_sub(const char* preset, const char* name) {
  return load_group(report::find_preset(preset).groups.at("main")).subgroup(name);
}

std::vector<FiniteGroup> all_preset_groups() {
  std::vector<FiniteGroup> out;
  for (const auto& p : report::presets())
    for (const auto& [name, file] : p.groups) {
      auto n = load_group(file).n;
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
  return out;
}

std::string pair_text(const FiniteGroup& n, const FiniteGroup& g, std::uint64_t q) {
  try {
    const auto p = asymptotic_prediction(find_cyclic_complement(n, g), q, true);
    return "a=" + to_string(p.a) + " b=" + std::to_string(p.b);
  } catch (const Error& e) {
    return std::string(to_string(e.code()));
  }
}

void check_pair(Outcome& o, const std::string& label, const FiniteGroup& n, const FiniteGroup& g,
                std::uint64_t q, const Rational& a, std::size_t b) {
  const std::string want = "a=" + to_string(a) + " b=" + std::to_string(b);
  const std::string got = pair_text(n, g, q);
  o.expect(got == want, label + " q=" + std::to_string(q) + ": want " + want + ", got " + got);
}

// 1. Kluners pairs and the aggregate
Outcome klueners() {
  Outcome o;
  const auto n = preset_n("klueners-s6");
  const auto g1 = preset_sub("klueners-s6", "G1");
  const auto g2 = preset_sub("klueners-s6", "G2");
  for (std::uint64_t q : {5ULL, 11ULL}) {
    check_pair(o, "(G1,N)", n, g1, q, Rational(1, 2), 2);
    check_pair(o, "(N,N)", n, n, q, Rational(1, 2), 1);
    check_pair(o, "(G2,N)", n, g2, q, Rational(1, 4), 1);
    const auto agg = revised_b(n, FunctionField{q});
    const auto formula = render_asymptotic(agg.a, agg.b);
    o.expect(formula == "X^{1/2} log X", "aggregate q=" + std::to_string(q) + ": " + formula);
  }
  return o;
}

// 2. wreath S18
Outcome wreath() {
  Outcome o;
  const auto n = preset_n("wreath-s18");
  for (std::uint64_t q : {5ULL, 11ULL}) {
    check_pair(o, "(N,N)", n, n, q, Rational(1, 4), 1);
    for (const char* name : {"wreath", "base", "base_y"})
      check_pair(o, std::string("(") + name + ",N)", n, preset_sub("wreath-s18", name), q, Rational(1, 4), 1);
    const auto agg = revised_b(n, FunctionField{q});
    const auto formula = render_asymptotic(agg.a, agg.b);
    o.expect(formula == "X^{1/4}", "aggregate q=" + std::to_string(q) + ": " + formula);
  }
  return o;
}

// classes of minimal index modulo C -> C^q, straight from representatives
std::size_t powering_orbits(const FiniteGroup& g, std::uint64_t q) {
  const ClassPartition cp(g);
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& c : cp)
    if (!c.trivial) best = std::min(best, c.index);
  UnionFind uf(cp.size());
  std::size_t count = 0;
  for (const auto& c : cp)
    if (!c.trivial && c.index == best) {
      ++count;
      if (uf.unite(c.class_id, cp.class_of(c.representative.pow(static_cast<long long>(q))))) --count;
    }
  return count;
}

// 3. b(N, N, q) against the powering orbits
Outcome ellenberg_venkatesh() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& n : all_preset_groups()) {
    const auto ctx = find_cyclic_complement(n, n);
    for (std::uint64_t q : prime_powers_coprime_to(n.order(), 50)) {
      const std::size_t b = b_constant(ctx, q).b;
      const std::size_t direct = powering_orbits(n, q);
      ++checked;
      o.expect(b == direct, "|N|=" + std::to_string(n.order()) + " q=" + std::to_string(q) + ": b=" +
                                std::to_string(b) + " direct=" + std::to_string(direct));
    }
  }
  o.note(std::to_string(checked) + " (N, q) pairs");
  return o;
}

// 4. b(G, N, q) <= b(N, N, q) over the abelian suite
Outcome abelian_comparison() {
  Outcome o;
  std::size_t comparisons = 0;
  for (const auto& [name, file] : report::find_preset("abelian-suite").groups) {
    const auto n = load_group(file).n;
    const Rational an = a_invariant(n);
    for (std::uint64_t q : prime_powers_coprime_to(n.order(), 50)) {
      const std::size_t bnn = b_constant(find_cyclic_complement(n, n), q).b;
      for (const auto& g : normal_subgroups_with_cyclic_quotient(n)) {
        if (g.is_trivial() || a_invariant(g) != an) continue;
        const auto ctx = find_cyclic_complement(n, g);
        if (!ctx.split) continue;
        const std::size_t bg = b_constant(ctx, q).b;
        ++comparisons;
        o.expect(bg <= bnn, name + " q=" + std::to_string(q) + ": b(G)=" + std::to_string(bg) +
                                " > b(N)=" + std::to_string(bnn));
      }
    }
  }
  o.note(std::to_string(comparisons) + " comparisons");
  return o;
}

// 5. expand vs brute force on every preset block system
Outcome euler_vs_oracle() {
  Outcome o;
  std::size_t systems = 0;
  for (const auto& n : all_preset_groups()) {
    for (const auto& g : normal_subgroups_with_cyclic_quotient(n)) {
      if (g.is_trivial()) continue;
      const auto ctx = find_cyclic_complement(n, g);
      for (std::uint64_t q : {2ULL, 3ULL, 5ULL}) {
        for (std::size_t e : admissible_e(ctx.d_prime)) {
          TwistSpec spec;
          try {
            spec = TwistSpec::make(ctx, q, e);
          } catch (const Error& err) {
            if (err.code() == ErrorCode::InvalidTwist) continue;
            throw;
          }
          for (bool restrict_minimal : {true, false}) {
            const auto blocks = orbit_blocks(spec, restrict_minimal);
            const auto a = expand(euler_product(blocks, q), 40);
            const auto b = brute_force_h3(blocks, q, 40);
            ++systems;
            o.expect(a.values == b.values, "|N|=" + std::to_string(n.order()) + " |G|=" +
                                               std::to_string(g.order()) + " q=" + std::to_string(q));
          }
        }
      }
    }
  }
  o.note(std::to_string(systems) + " block systems to R=40");
  return o;
}

// 6. partial-sum ratios
Outcome tauberian() {
  Outcome o;
  const auto ctx = find_cyclic_complement(preset_n("klueners-s6"), preset_sub("klueners-s6", "G1"));
  const auto gf = euler_product(orbit_blocks(TwistSpec::make(ctx, 5, 1), false), 5);
  const auto fit = tauberian_fit(expand(gf, 60), dominant_pole(gf));
  o.expect(fit.a == Rational(1, 2) && fit.b == 2, "G1 pole a=" + to_string(fit.a) + " b=" + std::to_string(fit.b));
  o.expect(fit.spread <= 10.0, "G1 spread " + fmt("%.4g", fit.spread));
  o.note("G1 spread " + fmt("%.4g", fit.spread) + " on stride " + std::to_string(fit.stride) +
         " (every R: " + fmt("%.4g", fit.unaligned_spread) + ")");

  const RationalGF single{5, 1, {{1, 2}}};
  const auto fs = tauberian_fit(expand(single, 60), dominant_pole(single));
  o.expect(fs.spread <= 4.0, "(1,2) spread " + fmt("%.4g", fs.spread));
  o.note("(1,2) spread " + fmt("%.4g", fs.spread));
  return o;
}

// 7. braid relations, Clebsch connectivity, traversal independence
Outcome braids() {
  Outcome o;
  const auto s3 = preset_n("s3-clebsch");
  const NielsenSpace space(s3, s3);
  std::vector<ElementIndex> transpositions;
  for (std::size_t i = 0; i < s3.order(); ++i)
    if (s3.element(i).cycle_count() == 2) transpositions.push_back(static_cast<ElementIndex>(i));

  for (std::size_t k : {4u, 5u}) {
    std::vector<Tuple> all{{}};
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Tuple> next;
      for (const auto& t : all)
        for (auto x : transpositions) {
          auto u = t;
          u.push_back(x);
          next.push_back(u);
        }
      all = std::move(next);
    }
    auto s = [&](std::size_t i, Tuple t) { return braid_generator(space, t, i); };
    std::size_t bad = 0;
    for (const auto& t : all) {
      for (std::size_t i = 1; i + 1 < k; ++i)
        if (s(i, s(i + 1, s(i, t))) != s(i + 1, s(i, s(i + 1, t)))) ++bad;
      for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j)
          if (s(i, s(j, t)) != s(j, s(i, t))) ++bad;
      for (std::size_t i = 1; i < k; ++i)
        if (braid_generator_inverse(space, s(i, t), i) != t) ++bad;
    }
    o.expect(bad == 0, std::to_string(bad) + " relation failures at k=" + std::to_string(k));
  }

  // union-find over raw tuples: Q_i and conjugation by all of S3
  ClassVector cv;
  cv.multiplicities[space.classes().class_of(parse_cycles("(1 2)", 3))] = 4;
  std::vector<Tuple> tuples;
  std::map<Tuple, std::size_t> index;
  for (std::size_t code = 0; code < 81; ++code) {
    Tuple t;
    std::size_t c = code;
    for (int j = 0; j < 4; ++j, c /= 3) t.push_back(transpositions[c % 3]);
    if (!space.product_is_one(t) || !space.generates(t)) continue;
    index[t] = tuples.size();
    tuples.push_back(t);
  }
  UnionFind uf(tuples.size());
  std::size_t components = tuples.size();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = 1; j < 4; ++j)
      if (uf.unite(i, index.at(braid_generator(space, tuples[i], j)))) --components;
    for (std::size_t x = 0; x < s3.order(); ++x) {
      Tuple u = tuples[i];
      for (auto& v : u) v = space.conjugate(v, x);
      if (uf.unite(i, index.at(u))) --components;
    }
  }
  const auto dec = braid_orbits(space, cv);
  o.expect(components == 1, "union-find components " + std::to_string(components));
  o.expect(dec.orbits.size() == components, "braid_orbits gives " + std::to_string(dec.orbits.size()));

  // traversal order; A4 with 3-cycles has two orbits
  const auto a4 = FiniteGroup::closure(std::vector{parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)}, 4);
  const NielsenSpace as(a4, a4);
  ClassVector acv, acv6;
  acv.multiplicities[as.classes().class_of(parse_cycles("(1 2 3)", 4))] = 2;
  acv.multiplicities[as.classes().class_of(parse_cycles("(1 3 2)", 4))] = 2;
  acv6.multiplicities[as.classes().class_of(parse_cycles("(1 2 3)", 4))] = 6;
  std::size_t compared = 0;
  for (const auto& [sp, v] : {std::pair{&space, cv}, std::pair{&as, acv}, std::pair{&as, acv6}}) {
    const auto bfs = braid_orbits(*sp, v, Traversal::BreadthFirst);
    const auto dfs = braid_orbits(*sp, v, Traversal::DepthFirst);
    bool same = bfs.orbit_of == dfs.orbit_of && bfs.orbits.size() == dfs.orbits.size();
    for (std::size_t i = 0; same && i < bfs.orbits.size(); ++i)
      same = bfs.orbits[i].canonical_key == dfs.orbits[i].canonical_key && bfs.orbits[i].size == dfs.orbits[i].size;
    o.expect(same, "BFS and DFS partitions differ");
    compared += bfs.orbits.size();
  }
  o.note("S3 4x(1 2): " + std::to_string(tuples.size()) + " tuples, 1 orbit; " + std::to_string(compared) +
         " orbits compared across traversals");
  return o;
}

// 8. desk-scale sandwich
Outcome desk_scale() {
  Outcome o;
  for (const auto& [name, file] : report::find_preset("abelian-suite").groups) {
    const auto n = load_group(file).n;
    const auto ctx = find_cyclic_complement(n, n);
    const std::uint64_t q = prime_powers_coprime_to(n.order(), 50).front();
    const auto rep = prop_main_check(TwistSpec::make(ctx, q, 1), 12);
    const bool ok = rep.m == std::size_t{0} && rep.c1 == Rational(1) && !rep.violation;
    o.expect(ok, name + " q=" + std::to_string(q) + ": m=" + (rep.m ? std::to_string(*rep.m) : "none") +
                     " c1=" + to_string(rep.c1));
  }
  const auto s3 = preset_n("s3-clebsch");
  for (std::size_t R : {6u, 12u}) {
    const auto rep = prop_main_check(TwistSpec::make(find_cyclic_complement(s3, s3), 7, 1), R);
    o.expect(rep.m.has_value() && !rep.violation, "S3 R=" + std::to_string(R) + " violation");
    if (R == 12) o.note("S3 q=7 R=12: m=" + (rep.m ? std::to_string(*rep.m) : "none") + " c1=" + to_string(rep.c1));
  }
  return o;
}

// 9. number-field variant at level 3
Outcome number_field() {
  Outcome o;
  const auto n = preset_n("klueners-q");
  const auto g1 = preset_sub("klueners-s6", "G1");
  std::size_t best = 0, chars = 0;
  for (const auto& phi : surjective_characters(n, g1, 3)) {
    best = std::max(best, b_phi(n, g1, phi));
    ++chars;
  }
  o.expect(chars > 0, "no surjective character at level 3");
  o.expect(best == 2, "max b_phi(G1) = " + std::to_string(best));
  RationalNumberField level3;
  level3.modulus = 3;
  const auto rep = revised_b(n, level3);
  o.expect(rep.b == 2, "b(N, Q) = " + std::to_string(rep.b));
  std::size_t ff = 0;
  for (std::uint64_t q : {5ULL, 11ULL}) ff = std::max(ff, revised_b(n, FunctionField{q}).b);
  o.expect(rep.b == ff, "function-field b = " + std::to_string(ff));
  o.note("max b_phi = " + std::to_string(best) + " over " + std::to_string(chars) + " characters");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "klueners counterexample", 10, klueners},
      {2, "wreath S18", 60, wreath},
      {3, "b(N,N,q) vs powering orbits", 0, ellenberg_venkatesh},
      {4, "abelian comparison", 0, abelian_comparison},
      {5, "euler product vs brute force", 0, euler_vs_oracle},
      {6, "tauberian shape", 5, tauberian},
      {7, "braid machinery", 0, braids},
      {8, "desk-scale sandwich", 0, desk_scale},
      {9, "number-field variant", 0, number_field},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.pass = false;
      o.failures.push_back("runtime " + fmt("%.2f", secs) + " s over " + fmt("%.0f", c.limit) + " s");
    }
    if (!o.pass) ++failed;
    std::string line = std::string(o.pass ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " + c.title + " (" +
                       fmt("%.2f", secs) + " s)";
    for (const auto& n : o.notes) line += "; " + n;
    std::printf("%s\n", line.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  std::fflush(stdout);
  return strict && failed ? 1 : 0;
}
