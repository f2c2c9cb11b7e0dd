#include "malle/conjugacy.hpp"

#include <algorithm>
#include <limits>

#include "malle/error.hpp"

namespace malle {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
}  // namespace

ClassPartition::ClassPartition(FiniteGroup group)
    : group_(std::move(group)), class_of_(group_.order(), kUnassigned) {
  const auto& gens = group_.generators();
  for (std::size_t start = 0; start < group_.order(); ++start) {
    if (class_of_[start] != kUnassigned) continue;
    const std::size_t id = classes_.size();
    ConjugacyClass cls;
    cls.class_id = id;
    cls.representative = group_.element(start);
    cls.index = ind(cls.representative);
    cls.trivial = cls.representative.is_identity();

    // Orbit under conjugation by the generators; elements are visited in
    // canonical order, so `start` is the minimal member.
    std::vector<std::size_t> orbit{start};
    class_of_[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const Permutation& x = group_.element(orbit[i]);
      for (const auto& h : gens) {
        const std::size_t y = *group_.index_of(x.conjugate_by(h));
        if (class_of_[y] == kUnassigned) {
          class_of_[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cls.members.reserve(orbit.size());
    for (std::size_t i : orbit) cls.members.push_back(group_.element(i));
    classes_.push_back(std::move(cls));
  }
}

std::size_t ClassPartition::class_of(const Permutation& g) const {
  auto idx = group_.index_of(g);
  if (!idx) {
    throw Error(ErrorCode::NotASubgroup, g.to_cycle_string() + " is not an element of the group");
  }
  return class_of_[*idx];
}

}  // namespace malle
