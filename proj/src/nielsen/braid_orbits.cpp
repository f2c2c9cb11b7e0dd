#include <algorithm>
#include <deque>
#include <stdexcept>

#include "malle/error.hpp"
#include "malle/nielsen.hpp"

namespace malle {

BraidDecomposition braid_orbits(const NielsenSpace& space, const ClassVector& cv, Traversal order) {
  BraidDecomposition out;
  out.class_vector = cv;
  const std::vector<Tuple> tuples = enumerate_nielsen(space, cv);
  out.tuple_count = tuples.size();
  out.conjugators = space.stabilizer(cv);
  const auto& conj = out.conjugators;

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<Tuple> keys;
  for (const auto& t : tuples) {
    Tuple key = space.canonical(t, conj);
    if (out.orbit_of.emplace(key, kUnassigned).second) {
      if (keys.size() >= space.limits().tuple_cap)
        throw Error(ErrorCode::EnumerationCapExceeded, "too many Nielsen classes");
      keys.push_back(std::move(key));
    }
  }
  std::sort(keys.begin(), keys.end());
  out.class_count = keys.size();

  const std::size_t k = cv.length();
  std::deque<Tuple> frontier;
  for (const auto& start : keys) {
    if (out.orbit_of.at(start) != kUnassigned) continue;
    const std::size_t id = out.orbits.size();
    BraidOrbit orbit;
    orbit.canonical_key = start;
    orbit.canonical_rep.entries = space.to_permutations(start);
    orbit.class_vector = cv;
    out.orbit_of[start] = id;
    orbit.size = 1;
    frontier.clear();
    frontier.push_back(start);
    while (!frontier.empty()) {
      Tuple cur;
      if (order == Traversal::BreadthFirst) {
        cur = std::move(frontier.front());
        frontier.pop_front();
      } else {
        cur = std::move(frontier.back());
        frontier.pop_back();
      }
      for (std::size_t i = 1; i < k; ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          Tuple next = space.canonical(
              dir == 0 ? braid_generator(space, cur, i) : braid_generator_inverse(space, cur, i), conj);
          auto it = out.orbit_of.find(next);
          if (it == out.orbit_of.end())
            throw std::logic_error("braid move left the Nielsen class");
          if (it->second != kUnassigned) continue;
          it->second = id;
          ++orbit.size;
          frontier.push_back(std::move(next));
        }
      }
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::size_t> frobenius_stable_orbits(const NielsenSpace& space,
                                                 const BraidDecomposition& decomposition,
                                                 const TwistSpec& spec) {
  if (!(spec.ctx.g == space.g()))
    throw Error(ErrorCode::InvalidArgument, "twist and Nielsen space use different groups");
  const FiniteGroup& g = space.g();
  std::vector<ElementIndex> image(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) image[i] = space.index_of(twist_element(g.element(i), spec));

  std::vector<std::size_t> stable;
  for (std::size_t id = 0; id < decomposition.orbits.size(); ++id) {
    const Tuple& key = decomposition.orbits[id].canonical_key;
    Tuple moved(key.size());
    for (std::size_t j = 0; j < key.size(); ++j) moved[j] = image[key[j]];
    if (!space.product_is_one(moved) || !space.generates(moved)) continue;
    if (!(space.class_vector(moved) == decomposition.class_vector)) continue;
    auto it = decomposition.orbit_of.find(space.canonical(moved, decomposition.conjugators));
    if (it != decomposition.orbit_of.end() && it->second == id) stable.push_back(id);
  }
  return stable;
}

std::vector<ProbePoint> conway_parker_probe(const NielsenSpace& space, const ClassVector& base,
                                            const ClassVector& pad, std::size_t max_m) {
  std::vector<ProbePoint> points;
  for (std::size_t m = 0; m <= max_m; ++m) {
    ProbePoint p;
    p.m = m;
    try {
      auto dec = braid_orbits(space, base + pad.scaled(m));
      p.orbit_count = dec.orbits.size();
      p.class_count = dec.class_count;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EnumerationCapExceeded) throw;
      p.complete = false;
      points.push_back(p);
      break;
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace malle
