#include <algorithm>

#include "malle/error.hpp"
#include "malle/series.hpp"

namespace malle {

namespace {

struct RationalVector {
  std::size_t weight = 0;
  std::size_t length = 0;
  ClassVector cv;
};

std::vector<RationalVector> rational_class_vectors(const std::vector<OrbitBlock>& blocks, std::size_t R) {
  std::vector<RationalVector> out;
  std::vector<std::size_t> mult(blocks.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t r) -> void {
    if (i == blocks.size()) {
      RationalVector v;
      v.weight = r;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (!mult[j]) continue;
        v.length += mult[j] * blocks[j].size;
        for (std::size_t c : blocks[j].classes) v.cv.multiplicities[c] += mult[j];
      }
      out.push_back(std::move(v));
      return;
    }
    for (mult[i] = 0; r + mult[i] * blocks[i].weight <= R; ++mult[i]) self(self, i + 1, r + mult[i] * blocks[i].weight);
    mult[i] = 0;
  };
  rec(rec, 0, 0);
  std::stable_sort(out.begin(), out.end(), [](const RationalVector& x, const RationalVector& y) {
    return x.weight != y.weight ? x.weight < y.weight : x.cv < y.cv;
  });
  return out;
}

}  // namespace

DeskScaleTable h2_desk_scale(const TwistSpec& spec, std::size_t R, const NielsenLimits& limits) {
  DeskScaleTable t;
  t.q = spec.q;
  t.e = spec.e;
  t.h2.assign(R + 1, BigInt(0));
  t.h3.assign(R + 1, BigInt(0));
  t.high_water_mark = R + 1;

  const NielsenSpace space(spec.ctx.g, spec.ctx.g, limits);
  const auto vectors = rational_class_vectors(orbit_blocks(spec, false), R);
  for (const auto& v : vectors) {
    std::size_t stable = 0;
    try {
      const auto dec = braid_orbits(space, v.cv);
      stable = frobenius_stable_orbits(space, dec, spec).size();
      t.max_orbit_count = std::max(t.max_orbit_count, dec.orbits.size());
    } catch (const Error& err) {
      if (err.code() != ErrorCode::EnumerationCapExceeded) throw;
      t.complete = false;
      t.high_water_mark = v.weight;
      t.h2.resize(v.weight);
      t.h3.resize(v.weight);
      return t;
    }
    t.max_stable_count = std::max(t.max_stable_count, stable);
    ++t.class_vectors;
    const BigInt power = big_pow(spec.q, v.length);
    t.h3[v.weight] += power;
    t.h2[v.weight] += power * stable;
  }
  return t;
}

PropMainReport prop_main_check(std::span<const BigInt> h2, std::span<const BigInt> h3, std::size_t R) {
  if (h2.size() < R || h3.size() < R)
    throw Error(ErrorCode::InsufficientRange, "tables shorter than the requested range");
  PropMainReport rep;
  rep.R = R;
  // H[x] = sum_{r < x} h(r), x = 0..R
  std::vector<BigInt> H2(R + 1, BigInt(0)), H3(R + 1, BigInt(0));
  for (std::size_t x = 1; x <= R; ++x) {
    H2[x] = H2[x - 1] + h2[x - 1];
    H3[x] = H3[x - 1] + h3[x - 1];
  }
  for (std::size_t m = 0; m < R && !rep.m; ++m) {
    bool ok = true;
    for (std::size_t x = 1; x <= R && ok; ++x) ok = H3[x >= m ? x - m : 0] <= H2[x];
    if (ok) rep.m = m;
  }
  if (!rep.m) {
    rep.violation = true;
    rep.notes.push_back("left inequality fails for every shift m < " + std::to_string(R));
  }

  rep.c1 = Rational(0);
  for (std::size_t x = 1; x <= R; ++x) {
    if (H3[x] == 0) {
      if (H2[x] != 0) {
        rep.violation = true;
        rep.notes.push_back("right inequality unbounded at R' = " + std::to_string(x));
        break;
      }
      continue;
    }
    Rational ratio(H2[x], H3[x]);
    if (ratio > rep.c1) rep.c1 = ratio;
  }
  return rep;
}

PropMainReport prop_main_check(const TwistSpec& spec, std::size_t R, const NielsenLimits& limits) {
  const auto table = h2_desk_scale(spec, R == 0 ? 0 : R - 1, limits);
  if (!table.complete)
    throw Error(ErrorCode::EnumerationCapExceeded,
                "desk-scale table exact only below weight " + std::to_string(table.high_water_mark));
  return prop_main_check(table.h2, table.h3, R);
}

}  // namespace malle
