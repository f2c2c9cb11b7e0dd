#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "malle/error.hpp"
#include "malle/invariants.hpp"
#include "malle/subgroups.hpp"
#include "support.hpp"

using namespace malle;
using namespace fixtures;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

std::set<Permutation> reps(const ClassPartition& cp, const std::vector<std::size_t>& ids) {
  std::set<Permutation> out;
  for (auto id : ids) out.insert(cp[id].representative);
  return out;
}

// |C(G) / <C -> C^q>| by a direct loop on representatives, no twist code
std::size_t powering_orbits(const FiniteGroup& g, std::uint64_t q) {
  const ClassPartition cp(g);
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& c : cp)
    if (!c.trivial) best = std::min(best, c.index);
  std::vector<std::size_t> parent(cp.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = 0;
  for (const auto& c : cp)
    if (!c.trivial && c.index == best) {
      ++count;
      const std::size_t img = cp.class_of(c.representative.pow(static_cast<long long>(q)));
      const std::size_t a = find(c.class_id), b = find(img);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  return count;
}

}  // namespace

TEST_CASE("minimal index classes") {
  const ClassPartition g1(kl_g1());
  CHECK(reps(g1, minimal_index_classes(g1)) ==
        std::set<Permutation>{P(6, "(1 2 3)"), P(6, "(1 3 2)"), P(6, "(4 5 6)"), P(6, "(4 6 5)")});
  for (auto id : minimal_index_classes(g1)) CHECK(g1[id].size() == 1);

  const ClassPartition c2(gen(2, {"(1 2)"}));
  REQUIRE(minimal_index_classes(c2).size() == 1);
  CHECK(c2[minimal_index_classes(c2)[0]].representative == P(2, "(1 2)"));

  const ClassPartition s(s3());
  REQUIRE(minimal_index_classes(s).size() == 1);
  CHECK(s[minimal_index_classes(s)[0]].size() == 3);

  CHECK(code_of([] { minimal_index_classes(ClassPartition(FiniteGroup::closure({}, 3))); }) ==
        ErrorCode::TrivialGroup);
}

TEST_CASE("twist_class examples") {
  const auto ctx = find_cyclic_complement(kl_n(), kl_g1());
  for (std::uint64_t q : {5, 11}) {
    const auto spec = TwistSpec::make(ctx, q, 1);
    const auto& cp = ctx.g_classes;
    CHECK(cp[twist_class(cp.class_of(P(6, "(1 2 3)")), spec)].representative == P(6, "(4 6 5)"));
    CHECK(cp[twist_class(cp.class_of(P(6, "(1 2 3)(4 5 6)")), spec)].representative == P(6, "(1 3 2)(4 6 5)"));
  }
  // G = N, q = 1 mod exp: identity
  for (const auto& g : {c6(), c3xc3(), kl_n()}) {
    const auto self = find_cyclic_complement(g, g);
    const std::uint64_t q = g.exponent() + 1;
    if (!is_prime_power(q) || std::gcd(q, g.order()) != 1) continue;
    const auto spec = TwistSpec::make(self, q, 1);
    for (const auto& c : self.g_classes) CHECK(twist_class(c.class_id, spec) == c.class_id);
  }
}

TEST_CASE("twist specs validate q and e") {
  const auto ctx = find_cyclic_complement(kl_n(), kl_g1());
  CHECK(code_of([&] { TwistSpec::make(ctx, 2, 1); }) == ErrorCode::InvalidTwist);
  CHECK(code_of([&] { TwistSpec::make(ctx, 6, 1); }) == ErrorCode::InvalidTwist);
  CHECK(code_of([&] { TwistSpec::make(ctx, 5, 2); }) == ErrorCode::InvalidTwist);
  CHECK(code_of([&] { TwistSpec::make(ctx, 5, 0); }) == ErrorCode::InvalidTwist);
  CHECK(admissible_e(6) == std::vector<std::size_t>{1, 5});
  CHECK(admissible_e(1) == std::vector<std::size_t>{1});
}

TEST_CASE("orbit blocks for the S6 example") {
  const auto ctx = find_cyclic_complement(kl_n(), kl_g1());
  const auto spec = TwistSpec::make(ctx, 5, 1);
  const auto& cp = ctx.g_classes;
  const auto restricted = orbit_blocks(spec, true);
  REQUIRE(restricted.size() == 2);
  std::set<std::set<Permutation>> got;
  for (const auto& b : restricted) {
    CHECK(b.size == 2);
    CHECK(b.index == 2);
    CHECK(b.weight == 4);
    got.insert(reps(cp, b.classes));
  }
  CHECK(got == std::set<std::set<Permutation>>{{P(6, "(1 2 3)"), P(6, "(4 6 5)")},
                                               {P(6, "(1 3 2)"), P(6, "(4 5 6)")}});
  // double 3-cycles: (123)(456) <-> (132)(465); (123)(465) and (132)(456)
  // are fixed because squaring and swapping the two triples cancel
  const auto all = orbit_blocks(spec, false);
  REQUIRE(all.size() == 5);
  std::set<std::set<Permutation>> doubles;
  for (const auto& b : all)
    if (b.index == 4) doubles.insert(reps(cp, b.classes));
  CHECK(doubles == std::set<std::set<Permutation>>{{P(6, "(1 2 3)(4 5 6)"), P(6, "(1 3 2)(4 6 5)")},
                                                   {P(6, "(1 2 3)(4 6 5)")},
                                                   {P(6, "(1 3 2)(4 5 6)")}});
  std::multiset<std::size_t> weights;
  for (const auto& b : all) weights.insert(b.weight);
  CHECK(weights == std::multiset<std::size_t>{4, 4, 4, 4, 8});
}

TEST_CASE("orbit blocks for the S18 base group") {
  const auto ctx = find_cyclic_complement(wr_n(), wr_base());
  CHECK(ctx.split);
  CHECK(ctx.d == 6);
  CHECK(ctx.d_prime == 3);
  const std::set<Permutation> six{P(18, kG1), P(18, kG1).pow(2), P(18, kG2), P(18, kG2).pow(2),
                                  P(18, kG3), P(18, kG3).pow(2)};
  for (std::uint64_t q : {5, 11})
    for (std::size_t e : {1, 2}) {
      const auto blocks = orbit_blocks(TwistSpec::make(ctx, q, e), true);
      REQUIRE(blocks.size() == 1);
      CHECK(reps(ctx.g_classes, blocks[0].classes) == six);
      CHECK(b_e(TwistSpec::make(ctx, q, e)) == 1);
    }
}

TEST_CASE("b_e and b_constant examples") {
  for (std::uint64_t q : {5, 11}) {
    const auto g1 = find_cyclic_complement(kl_n(), kl_g1());
    CHECK(b_e(TwistSpec::make(g1, q, 1)) == 2);
    CHECK(b_constant(g1, q).b == 2);
    CHECK(b_constant(g1, q).argmax_e == std::vector<std::size_t>{1});
    CHECK(b_constant(find_cyclic_complement(kl_n(), kl_n()), q).b == 1);
    CHECK(b_constant(find_cyclic_complement(wr_n(), wr_wreath()), q).b == 1);
  }
  // identity action: |C(N)|
  const auto v = find_cyclic_complement(v4(), v4());
  CHECK(b_e(TwistSpec::make(v, 3, 1)) == 3);
  const auto c = find_cyclic_complement(c4(), gen(4, {"(1 3)(2 4)"}));
  CHECK(code_of([&] { b_constant(c, 5); }) == ErrorCode::NotSplit);
  CHECK(b_constant(c, 5, true).outside_hypothesis);
}

TEST_CASE("asymptotic predictions") {
  const auto g1 = asymptotic_prediction(find_cyclic_complement(kl_n(), kl_g1()), 5);
  CHECK(g1.a == Rational(1, 2));
  CHECK(g1.b == 2);
  CHECK(g1.formula == "X^{1/2} log X");
  // cyclic-quotient order-3 subgroup: both minimal classes are fixed
  const auto g2 = asymptotic_prediction(find_cyclic_complement(kl_n(), kl_g2c()), 5);
  CHECK(g2.a == Rational(1, 4));
  CHECK(g2.b == 2);
  CHECK(g2.formula == "X^{1/4} log X");
  const auto ab = asymptotic_prediction(find_cyclic_complement(c3xc3(), c3xc3()), 7);
  CHECK(ab.a == a_invariant(c3xc3()));
  CHECK(ab.b == minimal_index_classes(ClassPartition(c3xc3())).size());
  CHECK(render_asymptotic(Rational(1, 3), 1) == "X^{1/3}");
  CHECK(render_asymptotic(Rational(1), 4) == "X^{1} (log X)^{3}");
}

TEST_CASE("twist_class is an index-preserving permutation of classes of finite order") {
  const std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs{
      {kl_n(), kl_g1()}, {kl_n(), kl_n()}, {kl_n(), kl_g2c()}, {wr_n(), wr_base()}, {wr_n(), wr_wreath()},
      {wr_n(), wr_base_y()}, {s3(), a3()}, {c6(), gen(6, {"(1 4)(2 5)(3 6)"})}};
  for (const auto& [n, g] : pairs) {
    const auto ctx = find_cyclic_complement(n, g);
    for (std::uint64_t q : prime_powers_coprime_to(n.order(), 30))
      for (std::size_t e : admissible_e(ctx.d_prime)) {
        const auto spec = TwistSpec::make(ctx, q, e);
        const auto& cp = ctx.g_classes;
        std::vector<std::size_t> map(cp.size());
        std::set<std::size_t> image;
        for (std::size_t c = 0; c < cp.size(); ++c) {
          map[c] = twist_class(c, spec);
          image.insert(map[c]);
          CHECK(cp[map[c]].index == cp[c].index);
          // independent of the representative
          for (const auto& m : cp[c].members) CHECK(cp.class_of(twist_element(m, spec)) == map[c]);
        }
        CHECK(image.size() == cp.size());
        std::vector<std::size_t> power(cp.size());
        std::iota(power.begin(), power.end(), 0);
        bool returned = false;
        for (std::size_t k = 1; k <= 720 && !returned; ++k) {
          for (auto& x : power) x = map[x];
          returned = true;
          for (std::size_t i = 0; i < power.size(); ++i) returned = returned && power[i] == i;
        }
        CHECK(returned);
        std::size_t minimal_blocks = 0;
        const std::size_t best = cp[minimal_index_classes(cp).front()].index;
        for (const auto& b : orbit_blocks(spec, false)) {
          if (b.index == best) ++minimal_blocks;
          for (auto c : b.classes) CHECK(cp[c].index == b.index);
        }
        CHECK(b_e(spec) == minimal_blocks);
      }
  }
}

TEST_CASE("b(N,N,q) equals the number of q-powering orbits on C(N)") {
  for (const auto& n : {kl_n(), wr_n(), s3(), v4(), c4(), c6(), c3xc3(), gen(5, {"(1 2 3 4 5)", "(2 5)(3 4)"})}) {
    const auto ctx = find_cyclic_complement(n, n);
    REQUIRE(ctx.d_prime == 1);
    for (std::uint64_t q : prime_powers_coprime_to(n.order(), 60)) CHECK(b_constant(ctx, q).b == powering_orbits(n, q));
  }
}

TEST_CASE("abelian N: b(G,N,q) <= b(N,N,q)") {
  std::size_t compared = 0;
  for (const auto& n : {v4(), c4(), c6(), c3xc3(), gen(8, {"(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)"})}) {
    REQUIRE(n.is_abelian());
    for (std::uint64_t q : prime_powers_coprime_to(n.order(), 50)) {
      const std::size_t bnn = b_constant(find_cyclic_complement(n, n), q).b;
      for (const auto& g : normal_subgroups_with_cyclic_quotient(n)) {
        if (g.is_trivial() || a_invariant(g) != a_invariant(n)) continue;
        const auto ctx = find_cyclic_complement(n, g);
        if (!ctx.split) continue;
        CHECK(b_constant(ctx, q).b <= bnn);
        ++compared;
      }
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("b_phi examples") {
  const FiniteGroup n = kl_n();
  RationalNumberField iso;
  iso.modulus = 3;
  iso.phi = {{1, Permutation::identity(6)}, {2, kl_tau()}};
  CHECK(b_phi(n, kl_g1(), iso) == 2);

  // exp(N) = 6, so the smallest admissible level for G = N is 6
  RationalNumberField triv;
  triv.modulus = 6;
  triv.phi = {{1, Permutation::identity(6)}, {5, Permutation::identity(6)}};
  CHECK(b_phi(n, n, triv) == 1);
  triv.modulus = 3;
  triv.phi = {{1, Permutation::identity(6)}, {2, Permutation::identity(6)}};
  CHECK(code_of([&] { b_phi(n, n, triv); }) == ErrorCode::BadModulus);

  RationalNumberField v;
  v.modulus = 2;
  v.phi = {{1, Permutation::identity(4)}};
  CHECK(b_phi(v4(), v4(), v) == 3);

  CHECK(code_of([&] {
          RationalNumberField bad = iso;
          bad.modulus = 2;
          bad.phi = {{1, Permutation::identity(6)}};
          b_phi(n, kl_g1(), bad);
        }) == ErrorCode::BadModulus);
  CHECK(code_of([&] {
          RationalNumberField bad;
          bad.modulus = 9;  // (Z/9)* is cyclic of order 6; 2 -> tau forces 4 -> 1
          for (std::uint64_t u : units_mod(9)) bad.phi[u] = Permutation::identity(6);
          bad.phi[2] = kl_tau();
          b_phi(n, kl_g1(), bad);
        }) == ErrorCode::NotAHomomorphism);
  CHECK(code_of([&] {
          RationalNumberField bad = iso;
          bad.phi[2] = P(6, "(1 2)");
          b_phi(n, kl_g1(), bad);
        }) == ErrorCode::NotAHomomorphism);
}

TEST_CASE("b_phi reproduces b_e for a character mimicking (q, tau^e)") {
  for (std::uint64_t q : {5, 11}) {
    for (const auto& g : {kl_g1(), kl_g2c()}) {
      const auto ctx = find_cyclic_complement(kl_n(), g);
      // q generates (Z/9)*, which is cyclic of order 6
      RationalNumberField f;
      f.modulus = 9;
      std::uint64_t u = 1;
      Permutation h = Permutation::identity(6);
      for (int k = 0; k < 6; ++k) {
        f.phi[u] = h;
        u = u * q % 9;
        h = h * *ctx.tau;
      }
      REQUIRE(f.phi.size() == 6);
      CHECK(b_phi(kl_n(), g, f) == b_e(TwistSpec::make(ctx, q, 1)));
    }
  }
}

TEST_CASE("surjective characters and lift independence") {
  const auto chars = surjective_characters(kl_n(), kl_g1(), 3);
  REQUIRE(chars.size() == 1);
  CHECK(kl_g1().contains(chars[0].phi.at(2) * kl_tau()));
  // any other lift of the same coset gives the same orbit count
  const FiniteGroup g1 = kl_g1();
  for (const auto& x : g1.elements()) {
    RationalNumberField f = chars[0];
    f.phi[2] = kl_tau() * x;
    CHECK(b_phi(kl_n(), kl_g1(), f) == 2);
  }
  CHECK(surjective_characters(kl_n(), kl_n(), 3).size() == 1);
  CHECK(surjective_characters(kl_n(), kl_g2c(), 3).empty());
}

TEST_CASE("revised b") {
  for (std::uint64_t q : {5, 11}) {
    const auto kl = revised_b(kl_n(), FunctionField{q});
    CHECK(kl.b == 2);
    CHECK(kl.a == Rational(1, 2));
    for (const auto& row : kl.rows) {
      if (row.g == kl_g1()) CHECK(row.b == std::optional<std::size_t>(2));
      if (row.g == kl_n()) CHECK(row.b == std::optional<std::size_t>(1));
      if (row.g.order() == 3) CHECK_FALSE(row.included);
    }
    CHECK(revised_b(wr_n(), FunctionField{q}).b == 1);
  }
  for (const auto& n : {v4(), c6(), c3xc3()})
    for (std::uint64_t q : {7, 13, 19}) {
      if (std::gcd(q, n.order()) != 1) continue;
      CHECK(revised_b(n, FunctionField{q}).b == b_constant(find_cyclic_complement(n, n), q).b);
    }

  RationalNumberField level3;
  level3.modulus = 3;
  CHECK(revised_b(kl_n(), level3).b == 2);
  RationalNumberField level2;
  level2.modulus = 2;
  CHECK(code_of([&] { revised_b(kl_n(), level2); }) == ErrorCode::NoAdmissibleSubgroup);
  CHECK(code_of([&] { revised_b(kl_n(), FunctionField{4}); }) == ErrorCode::InvalidTwist);
}
