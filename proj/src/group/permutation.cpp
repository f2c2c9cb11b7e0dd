#include "malle/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "malle/error.hpp"

namespace malle {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw Error(ErrorCode::InvalidArgument, "image list is not a bijection");
    }
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> used(degree, false);
    for (Point p : cycle) {
      if (p < 1 || p > degree) {
        throw Error(ErrorCode::PointOutOfRange,
                    "point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      }
      if (used[p - 1]) {
        throw Error(ErrorCode::InvalidArgument,
                    "point " + std::to_string(p) + " repeated inside one cycle");
      }
      used[p - 1] = true;
    }
    if (cycle.size() < 2) continue;
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    result = result * Permutation(std::move(images));
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot compose permutations of different degree");
  }
  std::vector<Point> images(degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = rhs.images_[images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> images(degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  const std::uint64_t ord = order();
  e %= ord;
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& h) const {
  return h.inverse() * *this * h;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::size_t Permutation::cycle_count() const { return cycle_type().size(); }

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t ind(const Permutation& g) { return g.degree() - g.cycle_count(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace malle
