#include <algorithm>
#include <numeric>
#include <string>

#include "malle/error.hpp"
#include "malle/invariants.hpp"

namespace malle {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return m == 1 ? 1 : (a * b) % m;
}

/// Greedy generating set of (Z/M)^*.
std::vector<std::uint64_t> unit_generators(std::uint64_t m, const std::vector<std::uint64_t>& units) {
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> span{1};
  for (std::uint64_t u : units) {
    if (std::find(span.begin(), span.end(), u) != span.end()) continue;
    gens.push_back(u);
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (std::uint64_t g : gens) {
        const std::uint64_t v = mul_mod(span[i], g, m);
        if (std::find(span.begin(), span.end(), v) == span.end()) span.push_back(v);
      }
    }
  }
  return gens;
}

std::size_t count_orbits(const ClassPartition& classes, const std::vector<std::size_t>& domain,
                         const std::vector<std::pair<std::uint64_t, Permutation>>& actions) {
  std::vector<bool> in_domain(classes.size(), false);
  for (std::size_t id : domain) in_domain[id] = true;
  std::vector<bool> seen(classes.size(), false);
  std::size_t orbits = 0;
  for (std::size_t start : domain) {
    if (seen[start]) continue;
    ++orbits;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      const Permutation& g = classes[c].representative;
      for (const auto& [u, lift] : actions) {
        const std::size_t image = classes.class_of(g.pow(static_cast<long long>(u)).conjugate_by(lift));
        if (!in_domain[image]) throw std::logic_error("twisted action leaves C(G)");
        if (!seen[image]) {
          seen[image] = true;
          stack.push_back(image);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

std::vector<std::uint64_t> units_mod(std::uint64_t m) {
  if (m <= 1) return {1};
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < m; ++u) {
    if (std::gcd(u, m) == 1) out.push_back(u);
  }
  return out;
}

std::size_t b_phi(const FiniteGroup& n, const FiniteGroup& g, const FieldSpec& field) {
  const auto* nf = std::get_if<RationalNumberField>(&field);
  if (nf == nullptr) {
    throw Error(ErrorCode::InvalidArgument, "b_phi needs a number field");
  }
  const std::uint64_t m = nf->modulus;
  if (m == 0 || m % g.exponent() != 0) {
    throw Error(ErrorCode::BadModulus, "exponent " + std::to_string(g.exponent()) +
                                           " of G does not divide M = " + std::to_string(m));
  }
  const CosetMap quotient(n, g);
  const auto units = units_mod(m);
  std::vector<std::pair<std::uint64_t, Permutation>> actions;
  for (std::uint64_t u : units) {
    auto it = nf->phi.find(u);
    if (it == nf->phi.end() || !n.contains(it->second)) {
      throw Error(ErrorCode::NotAHomomorphism,
                  "phi has no value in N for unit " + std::to_string(u));
    }
    actions.emplace_back(u, it->second);
  }
  for (const auto& [u, x] : actions) {
    for (const auto& [v, y] : actions) {
      const std::uint64_t uv = mul_mod(u, v, m);
      const auto& z = nf->phi.at(uv);
      if (quotient.coset_of(z) != quotient.multiply(quotient.coset_of(x), quotient.coset_of(y))) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "phi(" + std::to_string(u) + "*" + std::to_string(v) + ") != phi(" +
                        std::to_string(u) + ") phi(" + std::to_string(v) + ") in N/G");
      }
    }
  }
  const ClassPartition classes(g);
  return count_orbits(classes, minimal_index_classes(classes), actions);
}

std::vector<RationalNumberField> surjective_characters(const FiniteGroup& n, const FiniteGroup& g,
                                                       std::uint64_t modulus) {
  const CosetMap quotient(n, g);
  const auto units = units_mod(modulus);
  const auto gens = unit_generators(modulus, units);
  const std::size_t d = quotient.index();

  std::vector<RationalNumberField> out;
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    // Propagate the generator images along a BFS over (Z/M)^*.
    std::map<std::uint64_t, std::size_t> value{{1, 0}};
    std::vector<std::uint64_t> queue{1};
    bool consistent = true;
    for (std::size_t i = 0; i < queue.size() && consistent; ++i) {
      const std::uint64_t u = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::uint64_t v = mul_mod(u, gens[j], modulus);
        const std::size_t val = quotient.multiply(value[u], images[j]);
        auto [it, inserted] = value.emplace(v, val);
        if (inserted) {
          queue.push_back(v);
        } else if (it->second != val) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      for (std::uint64_t u : units) {
        for (std::uint64_t v : units) {
          if (value[mul_mod(u, v, modulus)] != quotient.multiply(value[u], value[v])) consistent = false;
        }
      }
    }
    if (consistent) {
      std::vector<std::size_t> image_cosets;
      for (const auto& [u, c] : value) image_cosets.push_back(c);
      auto reached = quotient.generated(image_cosets);
      if (std::all_of(reached.begin(), reached.end(), [](bool b) { return b; })) {
        RationalNumberField field;
        field.modulus = modulus;
        for (const auto& [u, c] : value) field.phi.emplace(u, quotient.representative(c));
        out.push_back(std::move(field));
      }
    }

    std::size_t pos = 0;
    while (pos < images.size() && ++images[pos] == d) images[pos++] = 0;
    if (pos == images.size()) break;
  }
  return out;
}

RevisedReport revised_b(const FiniteGroup& n, const FieldSpec& field, QuotientFilter filter) {
  const auto* ff = std::get_if<FunctionField>(&field);
  const auto* nf = std::get_if<RationalNumberField>(&field);
  if (ff != nullptr) validate_q(ff->q, n.order());

  RevisedReport report;
  report.a = a_invariant(n);
  const auto candidates = filter == QuotientFilter::Abelian
                              ? normal_subgroups_with_abelian_quotient(n)
                              : normal_subgroups_with_cyclic_quotient(n);
  for (const auto& g : candidates) {
    if (g.is_trivial()) continue;
    RevisedRow row;
    row.g = g;
    row.a = a_invariant(g);
    const CosetMap quotient(n, g);
    row.quotient_abelian = quotient.is_abelian();
    row.quotient_cyclic = quotient.is_cyclic();
    if (row.a != report.a) {
      row.note = "a(G) != a(N)";
      report.rows.push_back(std::move(row));
      continue;
    }

    if (ff != nullptr) {
      if (!row.quotient_cyclic) {
        row.note = "N/G not cyclic: no N_G-extensions of a function field";
      } else {
        const GNContext ctx = find_cyclic_complement(n, g);
        row.split = ctx.split;
        if (!ctx.split) {
          row.note = "non-split: outside the proven split case, skipped";
        } else {
          row.b = b_constant(ctx, ff->q).b;
          row.included = true;
        }
      }
    } else {
      const std::uint64_t level = nf->modulus == 0 ? n.exponent() : nf->modulus;
      if (level % g.exponent() != 0) {
        row.note = "exp(G) does not divide the cyclotomic level";
      } else {
        std::optional<std::size_t> best;
        for (const auto& phi : surjective_characters(n, g, level)) {
          const std::size_t value = b_phi(n, g, phi);
          if (!best || value > *best) best = value;
        }
        if (!best) {
          row.note = "no surjective phi at level " + std::to_string(level);
        } else {
          row.b = best;
          row.included = true;
        }
      }
    }
    if (row.included) report.b = std::max(report.b, *row.b);
    report.rows.push_back(std::move(row));
  }
  if (report.b == 0) {
    throw Error(ErrorCode::NoAdmissibleSubgroup, "no normal subgroup satisfies the constraints");
  }
  return report;
}

}  // namespace malle
