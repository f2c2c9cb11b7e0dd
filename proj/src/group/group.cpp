#include "malle/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "malle/error.hpp"

namespace malle {

FiniteGroup FiniteGroup::build(std::size_t degree, std::vector<Permutation> generators,
                               std::vector<Permutation> elements) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = std::move(generators);
  data->elements = std::move(elements);
  std::sort(data->elements.begin(), data->elements.end());
  data->index.reserve(data->elements.size());
  for (std::size_t i = 0; i < data->elements.size(); ++i) data->index.emplace(data->elements[i], i);
  FiniteGroup g;
  g.data_ = std::move(data);
  return g;
}

FiniteGroup FiniteGroup::closure(std::span<const Permutation> generators, std::size_t degree,
                                 const GroupLimits& limits) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator " + g.to_cycle_string() + " has degree " +
                                                 std::to_string(g.degree()) + ", expected " +
                                                 std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::deque<Permutation> frontier;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (elements.size() >= limits.order_cap) {
          throw Error(ErrorCode::OrderCapExceeded,
                      "group closure exceeds order cap " + std::to_string(limits.order_cap));
        }
        elements.push_back(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  return build(degree, std::move(gens), std::move(elements));
}

FiniteGroup FiniteGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::unordered_set<Permutation, PermutationHash> members(elements.begin(), elements.end());
  if (!members.contains(Permutation::identity(degree))) {
    throw Error(ErrorCode::NotASubgroup, "element set lacks the identity");
  }
  for (const auto& a : elements) {
    if (a.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "element degree mismatch");
    for (const auto& b : elements) {
      if (!members.contains(a * b)) {
        throw Error(ErrorCode::NotASubgroup, "element set is not closed under composition");
      }
    }
  }

  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(degree)};
  for (const auto& x : elements) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    auto sub = closure(gens, degree, {.order_cap = elements.size()});
    span = {sub.elements().begin(), sub.elements().end()};
    if (span.size() == elements.size()) break;
  }
  return build(degree, std::move(gens), std::move(elements));
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::contains(const FiniteGroup& sub) const {
  if (sub.degree() != degree()) return false;
  return std::all_of(sub.elements().begin(), sub.elements().end(),
                     [&](const Permutation& p) { return contains(p); });
}

bool FiniteGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& x : elements()) e = std::lcm(e, x.order());
  return e;
}

CayleyTable::CayleyTable(const FiniteGroup& group) : order_(group.order()) {
  if (order_ > kMaxOrder) {
    throw Error(ErrorCode::OrderCapExceeded, "group of order " + std::to_string(order_) +
                                                 " is too large for a dense multiplication table");
  }
  table_.resize(order_ * order_);
  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      table_[a * order_ + b] = static_cast<Index>(*group.index_of(group.element(a) * group.element(b)));
    }
    inverse_[a] = static_cast<Index>(*group.index_of(group.element(a).inverse()));
  }
}

CayleyTable::Index CayleyTable::pow(Index a, std::uint64_t k) const {
  Index result = 0;
  Index base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<bool> CayleyTable::generated(std::span<const Index> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<Index> stack{0};
  in[0] = true;
  while (!stack.empty()) {
    Index x = stack.back();
    stack.pop_back();
    for (Index g : gens) {
      Index y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
      }
    }
  }
  return in;
}

bool CayleyTable::generates_all(std::span<const Index> gens) const {
  auto in = generated(gens);
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

}  // namespace malle
