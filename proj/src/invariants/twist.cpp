#include <algorithm>
#include <limits>
#include <stdexcept>
#include <numeric>
#include <string>

#include "malle/error.hpp"
#include "malle/invariants.hpp"

namespace malle {

void validate_q(std::uint64_t q, std::size_t group_order) {
  if (!is_prime_power(q)) {
    throw Error(ErrorCode::InvalidTwist, "q = " + std::to_string(q) + " is not a prime power");
  }
  if (std::gcd(q, static_cast<std::uint64_t>(group_order)) != 1) {
    throw Error(ErrorCode::InvalidTwist, "q = " + std::to_string(q) + " shares a factor with |N| = " +
                                             std::to_string(group_order));
  }
}

std::vector<std::size_t> admissible_e(std::size_t d_prime) {
  std::vector<std::size_t> out;
  for (std::size_t e = 1; e <= d_prime; ++e) {
    if (std::gcd(e, d_prime) == 1) out.push_back(e);
  }
  return out;
}

TwistSpec TwistSpec::make(GNContext ctx, std::uint64_t q, std::size_t e) {
  validate_q(q, ctx.n.order());
  if (e < 1 || e > ctx.d_prime || std::gcd(e, ctx.d_prime) != 1) {
    throw Error(ErrorCode::InvalidTwist, "e = " + std::to_string(e) + " is not admissible for d' = " +
                                             std::to_string(ctx.d_prime));
  }
  TwistSpec spec;
  spec.ctx = std::move(ctx);
  spec.q = q;
  spec.e = e;
  return spec;
}

std::vector<std::size_t> minimal_index_classes(const ClassPartition& classes) {
  if (classes.group().is_trivial()) {
    throw Error(ErrorCode::TrivialGroup, "C(G) is undefined for the trivial group");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& c : classes) {
    if (!c.trivial) best = std::min(best, c.index);
  }
  std::vector<std::size_t> ids;
  for (const auto& c : classes) {
    if (!c.trivial && c.index == best) ids.push_back(c.class_id);
  }
  return ids;
}

Permutation twist_element(const Permutation& g, const TwistSpec& spec) {
  const Permutation h = spec.ctx.twist_element().pow(static_cast<long long>(spec.e));
  return g.pow(static_cast<long long>(spec.q)).conjugate_by(h);
}

std::size_t twist_class(std::size_t class_id, const TwistSpec& spec) {
  const auto& classes = spec.ctx.g_classes;
  const auto& cls = classes[class_id];
  const std::size_t image = classes.class_of(twist_element(cls.representative, spec));
  for (const auto& m : cls.members) {
    if (classes.class_of(twist_element(m, spec)) != image) {
      throw std::logic_error("twisted action is not well defined on class " +
                             std::to_string(class_id));
    }
  }
  return image;
}

std::vector<OrbitBlock> orbit_blocks(const TwistSpec& spec, bool restrict_minimal) {
  const auto& classes = spec.ctx.g_classes;
  std::vector<bool> wanted(classes.size(), false);
  if (restrict_minimal) {
    for (std::size_t id : minimal_index_classes(classes)) wanted[id] = true;
  } else {
    for (const auto& c : classes) wanted[c.class_id] = !c.trivial;
  }

  std::vector<bool> done(classes.size(), false);
  std::vector<OrbitBlock> blocks;
  for (std::size_t start = 0; start < classes.size(); ++start) {
    if (!wanted[start] || done[start]) continue;
    OrbitBlock block;
    block.e = spec.e;
    for (std::size_t c = start; !done[c]; c = twist_class(c, spec)) {
      done[c] = true;
      block.classes.push_back(c);
    }
    std::sort(block.classes.begin(), block.classes.end());
    block.size = block.classes.size();
    block.index = classes[start].index;
    block.weight = block.size * block.index;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::size_t b_e(const TwistSpec& spec) { return orbit_blocks(spec, true).size(); }

BConstant b_constant(const GNContext& ctx, std::uint64_t q, bool allow_nonsplit) {
  if (!ctx.split && !allow_nonsplit) {
    throw Error(ErrorCode::NotSplit, "G has no cyclic complement in N");
  }
  BConstant out;
  out.outside_hypothesis = !ctx.split;
  for (std::size_t e : admissible_e(ctx.d_prime)) {
    const std::size_t value = b_e(TwistSpec::make(ctx, q, e));
    out.per_e.emplace_back(e, value);
    if (value > out.b) {
      out.b = value;
      out.argmax_e.clear();
    }
    if (value == out.b) out.argmax_e.push_back(e);
  }
  return out;
}

std::string render_asymptotic(const Rational& a, std::size_t b) {
  std::string s = "X^{" + to_string(a) + "}";
  if (b == 2) s += " log X";
  if (b > 2) s += " (log X)^{" + std::to_string(b - 1) + "}";
  return s;
}

AsymptoticReport asymptotic_prediction(const GNContext& ctx, std::uint64_t q, bool allow_nonsplit) {
  AsymptoticReport out;
  out.detail = b_constant(ctx, q, allow_nonsplit);
  out.a = a_invariant(ctx.g);
  out.b = out.detail.b;
  out.formula = render_asymptotic(out.a, out.b);
  return out;
}

}  // namespace malle
