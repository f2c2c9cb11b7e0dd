#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace malle {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}. Storage is 0-based; everything printed or
/// parsed is 1-based.
///
/// Composition convention, used everywhere in the library: `f * g` means
/// "apply f, then g", so (f * g)(i) = g(f(i)). A tuple product g1 * ... * gk
/// is evaluated left to right under this rule.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  /// Cycles use 1-based points and are applied left to right; they need not
  /// be disjoint. Throws PointOutOfRange for points outside 1..degree.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  /// h^-1 * this * h.
  Permutation conjugate_by(const Permutation& h) const;

  bool is_identity() const;
  std::uint64_t order() const;
  std::size_t cycle_count() const;

  /// Cycle lengths including fixed points, descending.
  std::vector<std::size_t> cycle_type() const;

  /// Canonical 1-based disjoint-cycle form, smallest point first in every
  /// cycle, cycles ordered by their first point, fixed points omitted. The
  /// identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// ind(g) = n - (number of orbits of <g> on the n points).
std::size_t ind(const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace malle
