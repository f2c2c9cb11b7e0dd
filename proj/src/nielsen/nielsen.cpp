#include "malle/nielsen.hpp"

#include <algorithm>
#include <string>

#include "malle/error.hpp"
#include "malle/subgroups.hpp"

namespace malle {

std::size_t ClassVector::length() const {
  std::size_t k = 0;
  for (const auto& [id, m] : multiplicities) k += m;
  return k;
}

std::size_t ClassVector::weight(const ClassPartition& classes) const {
  std::size_t w = 0;
  for (const auto& [id, m] : multiplicities) {
    if (id >= classes.size()) throw Error(ErrorCode::IndexOutOfRange, "class id out of range");
    w += m * classes[id].index;
  }
  return w;
}

ClassVector ClassVector::operator+(const ClassVector& other) const {
  ClassVector out = *this;
  for (const auto& [id, m] : other.multiplicities) out.multiplicities[id] += m;
  std::erase_if(out.multiplicities, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ClassVector ClassVector::scaled(std::size_t factor) const {
  ClassVector out;
  if (factor == 0) return out;
  for (const auto& [id, m] : multiplicities)
    if (m) out.multiplicities[id] = m * factor;
  return out;
}

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : t) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

NielsenSpace::NielsenSpace(FiniteGroup g, FiniteGroup n, NielsenLimits limits)
    : g_(std::move(g)), n_(std::move(n)), classes_(g_), table_(g_), limits_(limits) {
  if (n_.degree() != g_.degree())
    throw Error(ErrorCode::DegreeMismatch, "G and N act on different degrees");
  if (n_.order() > CayleyTable::kMaxOrder)
    throw Error(ErrorCode::OrderCapExceeded, "conjugating group too large for Nielsen work");
  const std::size_t og = g_.order();
  conjugation_.resize(n_.order() * og);
  for (std::size_t x = 0; x < n_.order(); ++x) {
    const Permutation& h = n_.element(x);
    for (std::size_t i = 0; i < og; ++i) {
      auto j = g_.index_of(g_.element(i).conjugate_by(h));
      if (!j) throw Error(ErrorCode::NotASubgroup, "N does not normalize G");
      conjugation_[x * og + i] = static_cast<ElementIndex>(*j);
    }
  }
  for (const auto& gen : n_.generators()) n_generators_.push_back(*n_.index_of(gen));
}

ElementIndex NielsenSpace::index_of(const Permutation& p) const {
  auto i = g_.index_of(p);
  if (!i) throw Error(ErrorCode::NotASubgroup, "tuple entry " + p.to_cycle_string() + " is not in G");
  return static_cast<ElementIndex>(*i);
}

Tuple NielsenSpace::to_tuple(std::span<const Permutation> entries) const {
  Tuple t;
  t.reserve(entries.size());
  for (const auto& p : entries) t.push_back(index_of(p));
  return t;
}

std::vector<Permutation> NielsenSpace::to_permutations(const Tuple& t) const {
  std::vector<Permutation> out;
  out.reserve(t.size());
  for (auto i : t) out.push_back(g_.element(i));
  return out;
}

Tuple NielsenSpace::canonical(const Tuple& t) const {
  std::vector<std::size_t> all(n_.order());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  return canonical(t, all);
}

Tuple NielsenSpace::canonical(const Tuple& t, std::span<const std::size_t> conjugators) const {
  Tuple best = t;
  const std::size_t k = t.size();
  for (std::size_t x : conjugators) {
    if (x == 0) continue;
    // lazy lexicographic comparison against the current best
    for (std::size_t pos = 0; pos < k; ++pos) {
      ElementIndex c = conjugate(t[pos], x);
      if (c != best[pos]) {
        if (c < best[pos]) {
          best[pos] = c;
          for (std::size_t r = pos + 1; r < k; ++r) best[r] = conjugate(t[r], x);
        }
        break;
      }
    }
  }
  return best;
}

std::vector<std::size_t> NielsenSpace::stabilizer(const ClassVector& cv) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_.order(); ++x) {
    ClassVector moved;
    for (const auto& [id, m] : cv.multiplicities) {
      const std::size_t rep = *g_.index_of(classes_[id].representative);
      moved.multiplicities[classes_.class_of_index(conjugate(static_cast<ElementIndex>(rep), x))] += m;
    }
    if (moved == cv) out.push_back(x);
  }
  return out;
}

bool NielsenSpace::product_is_one(const Tuple& t) const {
  ElementIndex p = 0;
  for (auto x : t) p = table_.mul(p, x);
  return p == 0;
}

bool NielsenSpace::generates(const Tuple& t) const { return table_.generates_all(t); }

ClassVector NielsenSpace::class_vector(const Tuple& t) const {
  ClassVector cv;
  for (auto x : t) ++cv.multiplicities[classes_.class_of_index(x)];
  return cv;
}

namespace {

struct Enumerator {
  const NielsenSpace& space;
  std::vector<std::size_t> remaining;  // by class id
  std::vector<std::vector<ElementIndex>> members;
  std::size_t k;
  std::size_t candidates = 0;
  Tuple current;
  std::vector<Tuple> out;

  void run(std::size_t pos, ElementIndex prefix) {
    if (++candidates > space.limits().candidate_cap)
      throw Error(ErrorCode::EnumerationCapExceeded, "Nielsen enumeration exceeded the candidate cap");
    const auto& table = space.table();
    const auto& classes = space.classes();
    if (pos + 1 == k) {
      ElementIndex last = table.inv(prefix);
      std::size_t c = classes.class_of_index(last);
      if (remaining[c] != 1) return;
      current[pos] = last;
      if (!table.generates_all(current)) return;
      if (out.size() >= space.limits().tuple_cap)
        throw Error(ErrorCode::EnumerationCapExceeded, "Nielsen enumeration exceeded the tuple cap");
      out.push_back(current);
      return;
    }
    for (std::size_t c = 1; c < remaining.size(); ++c) {
      if (!remaining[c]) continue;
      --remaining[c];
      for (ElementIndex x : members[c]) {
        current[pos] = x;
        run(pos + 1, table.mul(prefix, x));
      }
      ++remaining[c];
    }
  }
};

}  // namespace

std::vector<Tuple> enumerate_nielsen(const NielsenSpace& space, const ClassVector& cv) {
  const auto& classes = space.classes();
  std::vector<std::size_t> remaining(classes.size(), 0);
  for (const auto& [id, m] : cv.multiplicities) {
    if (id >= classes.size()) throw Error(ErrorCode::IndexOutOfRange, "class id out of range");
    if (m && classes[id].trivial)
      throw Error(ErrorCode::TrivialClassPresent, "class vector contains the identity class");
    remaining[id] = m;
  }
  const std::size_t k = cv.length();
  if (k == 0) {
    if (space.g().is_trivial()) return {Tuple{}};
    return {};
  }
  std::vector<std::vector<ElementIndex>> members(classes.size());
  for (std::size_t i = 0; i < space.g().order(); ++i)
    members[classes.class_of_index(i)].push_back(static_cast<ElementIndex>(i));
  Enumerator en{space, std::move(remaining), std::move(members), k, 0, Tuple(k, 0), {}};
  en.run(0, 0);
  std::sort(en.out.begin(), en.out.end());
  return std::move(en.out);
}

Tuple braid_generator(const NielsenSpace& space, const Tuple& t, std::size_t i) {
  if (i < 1 || i >= t.size())
    throw Error(ErrorCode::IndexOutOfRange, "braid generator index " + std::to_string(i) + " out of range");
  const auto& tab = space.table();
  Tuple out = t;
  ElementIndex a = t[i - 1], b = t[i];
  out[i - 1] = tab.mul(tab.mul(a, b), tab.inv(a));
  out[i] = a;
  return out;
}

Tuple braid_generator_inverse(const NielsenSpace& space, const Tuple& t, std::size_t i) {
  if (i < 1 || i >= t.size())
    throw Error(ErrorCode::IndexOutOfRange, "braid generator index " + std::to_string(i) + " out of range");
  const auto& tab = space.table();
  Tuple out = t;
  ElementIndex a = t[i - 1], b = t[i];
  out[i - 1] = b;
  out[i] = tab.mul(tab.mul(tab.inv(b), a), b);
  return out;
}

NielsenTuple braid_generator(const NielsenTuple& t, std::size_t i) {
  if (i < 1 || i >= t.length())
    throw Error(ErrorCode::IndexOutOfRange, "braid generator index " + std::to_string(i) + " out of range");
  NielsenTuple out = t;
  const Permutation& a = t.entries[i - 1];
  const Permutation& b = t.entries[i];
  out.entries[i - 1] = a * b * a.inverse();
  out.entries[i] = a;
  return out;
}

}  // namespace malle
