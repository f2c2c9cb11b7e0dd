#pragma once

#include <cstddef>
#include <vector>

#include "malle/group.hpp"

namespace malle {

struct ConjugacyClass {
  std::size_t class_id = 0;
  Permutation representative;  // the minimal member
  std::vector<Permutation> members;  // canonical order
  std::size_t index = 0;  // ind() of every member, in the degree-n action
  bool trivial = false;

  std::size_t size() const { return members.size(); }
};

/// The conjugacy classes of one group together with an element -> class
/// lookup. class_id follows the canonical order of minimal members, so the
/// identity class is always id 0.
class ClassPartition {
 public:
  ClassPartition() = default;
  explicit ClassPartition(FiniteGroup group);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t id) const { return classes_[id]; }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  std::size_t class_of_index(std::size_t element_index) const { return class_of_[element_index]; }

  /// Throws NotASubgroup if `g` is not an element of the group.
  std::size_t class_of(const Permutation& g) const;

 private:
  FiniteGroup group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

inline ClassPartition conjugacy_classes(const FiniteGroup& g) { return ClassPartition(g); }

}  // namespace malle
