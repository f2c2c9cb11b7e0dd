#include "malle/subgroups.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "malle/error.hpp"

namespace malle {

namespace {

std::vector<Permutation> concat_generators(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return gens;
}

std::vector<bool> membership(const FiniteGroup& n, const FiniteGroup& sub) {
  std::vector<bool> mask(n.order(), false);
  for (const auto& x : sub.elements()) mask[*n.index_of(x)] = true;
  return mask;
}

void sort_subgroups(std::vector<FiniteGroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.elements() < b.elements();
  });
}

void require_subgroup(const FiniteGroup& n, const FiniteGroup& g) {
  if (!n.contains(g)) throw Error(ErrorCode::NotASubgroup, "G is not contained in N");
}

}  // namespace

FiniteGroup centralizer(const FiniteGroup& n, const FiniteGroup& g) {
  require_subgroup(n, g);
  if (g.is_trivial()) return n;
  std::vector<Permutation> commuting;
  for (const auto& x : n.elements()) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&](const Permutation& h) { return x * h == h * x; });
    if (central) commuting.push_back(x);
  }
  return FiniteGroup::from_elements(n.degree(), std::move(commuting));
}

FiniteGroup join(const FiniteGroup& a, const FiniteGroup& b) {
  auto gens = concat_generators(a, b);
  return FiniteGroup::closure(gens, a.degree());
}

bool is_normal(const FiniteGroup& n, const FiniteGroup& g) {
  if (!n.contains(g)) return false;
  for (const auto& x : n.generators()) {
    for (const auto& h : g.generators()) {
      if (!g.contains(h.conjugate_by(x))) return false;
    }
  }
  return true;
}

std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& n) {
  const ClassPartition classes(n);
  std::vector<FiniteGroup> closures;
  for (const auto& cls : classes) {
    if (cls.trivial) continue;
    closures.push_back(FiniteGroup::closure(cls.members, n.degree()));
  }

  std::set<std::vector<bool>> seen;
  std::vector<FiniteGroup> found;
  auto add = [&](FiniteGroup sub) {
    if (seen.insert(membership(n, sub)).second) found.push_back(std::move(sub));
  };
  add(FiniteGroup::closure({}, n.degree()));
  for (const auto& c : closures) add(c);

  // Every normal subgroup is the join of the class closures it contains.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : closures) {
      if (found[i].contains(c)) continue;
      add(join(found[i], c));
    }
  }
  sort_subgroups(found);
  return found;
}

std::vector<FiniteGroup> normal_subgroups_with_cyclic_quotient(const FiniteGroup& n) {
  std::vector<FiniteGroup> out;
  for (auto& g : normal_subgroups(n)) {
    if (CosetMap(n, g).is_cyclic()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<FiniteGroup> normal_subgroups_with_abelian_quotient(const FiniteGroup& n) {
  std::vector<FiniteGroup> out;
  for (auto& g : normal_subgroups(n)) {
    if (CosetMap(n, g).is_abelian()) out.push_back(std::move(g));
  }
  return out;
}

CosetMap::CosetMap(FiniteGroup n, FiniteGroup g)
    : n_(std::move(n)), g_(std::move(g)) {
  if (!is_normal(n_, g_)) {
    throw Error(ErrorCode::NotASubgroup, "G is not a normal subgroup of N");
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  coset_of_.assign(n_.order(), kNone);
  for (std::size_t i = 0; i < n_.order(); ++i) {
    if (coset_of_[i] != kNone) continue;
    const std::size_t id = representatives_.size();
    const Permutation& x = n_.element(i);
    representatives_.push_back(x);
    for (const auto& h : g_.elements()) coset_of_[*n_.index_of(x * h)] = id;
  }
}

std::size_t CosetMap::coset_of(const Permutation& x) const {
  auto idx = n_.index_of(x);
  if (!idx) throw Error(ErrorCode::NotASubgroup, x.to_cycle_string() + " is not in N");
  return coset_of_[*idx];
}

std::size_t CosetMap::multiply(std::size_t a, std::size_t b) const {
  return coset_of(representatives_[a] * representatives_[b]);
}

std::size_t CosetMap::inverse(std::size_t a) const {
  return coset_of(representatives_[a].inverse());
}

std::uint64_t CosetMap::coset_order(const Permutation& x) const {
  const std::size_t c = coset_of(x);
  std::size_t acc = c;
  std::uint64_t k = 1;
  while (acc != 0) {
    acc = multiply(acc, c);
    ++k;
  }
  return k;
}

bool CosetMap::is_cyclic() const {
  return std::any_of(representatives_.begin(), representatives_.end(),
                     [&](const Permutation& x) { return coset_order(x) == index(); });
}

bool CosetMap::is_abelian() const {
  const auto& gens = n_.generators();
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (!g_.contains(a.inverse() * b.inverse() * a * b)) return false;
    }
  }
  return true;
}

std::vector<bool> CosetMap::generated(const std::vector<std::size_t>& cosets) const {
  std::vector<bool> in(index(), false);
  std::vector<std::size_t> stack{0};
  in[0] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t c : cosets) {
      const std::size_t y = multiply(x, c);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
      }
    }
  }
  return in;
}

GNContext find_cyclic_complement(const FiniteGroup& n, const FiniteGroup& g) {
  require_subgroup(n, g);
  const CosetMap quotient(n, g);
  const std::size_t d = quotient.index();

  GNContext ctx;
  ctx.n = n;
  ctx.g = g;
  ctx.g_classes = ClassPartition(g);
  ctx.d = d;

  std::optional<Permutation> first_generator;
  for (const auto& x : n.elements()) {
    if (quotient.coset_order(x) != d) continue;
    if (!first_generator) first_generator = x;
    // ord(x) = d together with ord(xG) = d forces <x> ∩ G = 1.
    if (x.order() == d) {
      ctx.tau = x;
      break;
    }
  }
  if (!first_generator) {
    throw Error(ErrorCode::NonCyclicQuotient,
                "N/G of order " + std::to_string(d) + " is not cyclic");
  }
  ctx.split = ctx.tau.has_value();
  ctx.coset_generator = ctx.tau ? *ctx.tau : *first_generator;

  ctx.centralizer = centralizer(n, g);
  const FiniteGroup g_cen = join(g, ctx.centralizer);
  ctx.d_prime = n.order() / g_cen.order();
  ctx.d_double_prime = g_cen.order() / g.order();
  return ctx;
}

std::size_t group_index(const FiniteGroup& g) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "ind is undefined for the trivial group");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& x : g.elements()) {
    if (!x.is_identity()) best = std::min(best, ind(x));
  }
  return best;
}

Rational a_invariant(const FiniteGroup& g) { return Rational(1, group_index(g)); }

}  // namespace malle
