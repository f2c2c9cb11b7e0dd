#include <algorithm>
#include <cmath>
#include <numeric>

#include "malle/error.hpp"
#include "malle/series.hpp"

namespace malle {

RationalGF euler_product(std::span<const OrbitBlock> blocks, std::uint64_t q) {
  RationalGF gf;
  gf.q = q;
  if (!blocks.empty()) gf.e = blocks.front().e;
  for (const auto& blk : blocks) {
    if (blk.index == 0 || blk.size == 0)
      throw Error(ErrorCode::TrivialClassPresent, "orbit block contains the identity class");
    if (blk.e != gf.e) throw Error(ErrorCode::InvalidArgument, "orbit blocks for different e");
    gf.factors.push_back({blk.size, blk.size * blk.index});
  }
  return gf;
}

CoefficientTable expand(const RationalGF& gf, std::size_t R) {
  CoefficientTable t;
  t.q = gf.q;
  t.e = gf.e;
  t.values.assign(R + 1, BigInt(0));
  t.values[0] = 1;
  for (const auto& f : gf.factors) {
    // multiply by 1/(1 - c u^r): v[n] += c * v[n - r], ascending n
    const BigInt c = big_pow(gf.q, f.coefficient_exponent);
    const std::size_t r = f.variable_exponent;
    if (r == 0) throw Error(ErrorCode::TrivialClassPresent, "factor with zero weight");
    for (std::size_t n = r; n <= R; ++n) t.values[n] += c * t.values[n - r];
  }
  return t;
}

CoefficientTable brute_force_h3(std::span<const OrbitBlock> blocks, std::uint64_t q, std::size_t R) {
  for (const auto& blk : blocks)
    if (blk.weight == 0) throw Error(ErrorCode::TrivialClassPresent, "orbit block contains the identity class");
  // counts[r][k]: number of multiplicity vectors of weight r and total size k
  std::vector<std::vector<std::uint64_t>> counts(R + 1);
  std::vector<std::size_t> mult(blocks.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t r, std::size_t k) -> void {
    if (i == blocks.size()) {
      auto& row = counts[r];
      if (row.size() <= k) row.resize(k + 1, 0);
      ++row[k];
      return;
    }
    for (std::size_t a = 0; r + a * blocks[i].weight <= R; ++a)
      self(self, i + 1, r + a * blocks[i].weight, k + a * blocks[i].size);
  };
  rec(rec, 0, 0, 0);

  CoefficientTable t;
  t.q = q;
  t.e = blocks.empty() ? 1 : blocks.front().e;
  t.values.assign(R + 1, BigInt(0));
  for (std::size_t r = 0; r <= R; ++r)
    for (std::size_t k = 0; k < counts[r].size(); ++k)
      if (counts[r][k]) t.values[r] += BigInt(counts[r][k]) * big_pow(q, k);
  return t;
}

PoleReport dominant_pole(const RationalGF& gf) {
  if (gf.factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty Euler product has no pole");
  PoleReport p;
  p.a = Rational(0);
  std::size_t period = 0;
  for (const auto& f : gf.factors) {
    Rational ratio(static_cast<long long>(f.coefficient_exponent), static_cast<long long>(f.variable_exponent));
    if (ratio > p.a) {
      p.a = ratio;
      p.b = 0;
    }
    if (ratio == p.a) ++p.b;
    period = std::gcd(period, f.variable_exponent);
  }
  p.period = period;
  p.dominant_radius = std::pow(static_cast<double>(gf.q), -p.a.convert_to<double>());

  // roots of unity of order dividing some dominant r, other than 1
  std::size_t L = 1;
  std::vector<std::size_t> orders;
  for (const auto& f : gf.factors) {
    Rational ratio(static_cast<long long>(f.coefficient_exponent), static_cast<long long>(f.variable_exponent));
    if (ratio == p.a) {
      orders.push_back(f.variable_exponent);
      L = std::lcm(L, f.variable_exponent);
    }
  }
  for (std::size_t j = 1; j < L; ++j)
    if (std::any_of(orders.begin(), orders.end(), [&](std::size_t r) { return j * r % L == 0; }))
      ++p.equal_modulus_poles;
  return p;
}

}  // namespace malle
