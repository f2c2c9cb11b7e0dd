#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "malle/numeric.hpp"
#include "malle/subgroups.hpp"

namespace malle {

/// Data for the twisted Frobenius action t_e = q * tau^{-e} on G-classes.
struct TwistSpec {
  GNContext ctx;
  std::uint64_t q = 0;
  std::size_t e = 1;

  /// Validates q (a prime power coprime to |N|) and e (1 <= e <= d',
  /// gcd(e, d') = 1). Throws InvalidTwist.
  static TwistSpec make(GNContext ctx, std::uint64_t q, std::size_t e);
};

/// e values with 1 <= e <= d' and gcd(e, d') = 1.
std::vector<std::size_t> admissible_e(std::size_t d_prime);

/// Throws InvalidTwist unless q is a prime power coprime to `group_order`.
void validate_q(std::uint64_t q, std::size_t group_order);

/// Ids of the nontrivial classes of minimal index: C(G). Throws TrivialGroup.
std::vector<std::size_t> minimal_index_classes(const ClassPartition& classes);

/// tau^{-e} * g^q * tau^{e}.
Permutation twist_element(const Permutation& g, const TwistSpec& spec);

/// The G-class of twist_element(representative). Checks that every member
/// lands in the same class.
std::size_t twist_class(std::size_t class_id, const TwistSpec& spec);

struct OrbitBlock {
  std::size_t e = 1;
  std::vector<std::size_t> classes;  // sorted class ids, one t_e-orbit
  std::size_t size = 0;
  std::size_t index = 0;
  std::size_t weight = 0;  // size * index
};

/// The t_e-orbits on nontrivial G-classes (or on C(G) only), ordered by
/// their least class id.
std::vector<OrbitBlock> orbit_blocks(const TwistSpec& spec, bool restrict_minimal);

/// Number of t_e-orbits on C(G).
std::size_t b_e(const TwistSpec& spec);

struct BConstant {
  std::size_t b = 0;
  std::vector<std::size_t> argmax_e;
  std::vector<std::pair<std::size_t, std::size_t>> per_e;  // (e, b_e)
  bool outside_hypothesis = false;  // computed for a non-split pair
};

/// max b_e over admissible e. Throws NotSplit for a non-split pair unless
/// `allow_nonsplit`, in which case the coset generator stands in for tau
/// and the result is flagged.
BConstant b_constant(const GNContext& ctx, std::uint64_t q, bool allow_nonsplit = false);

struct AsymptoticReport {
  Rational a;
  std::size_t b = 1;
  std::string formula;
  BConstant detail;
};

/// "X^{a}", "X^{a} log X" or "X^{a} (log X)^{b-1}".
std::string render_asymptotic(const Rational& a, std::size_t b);

AsymptoticReport asymptotic_prediction(const GNContext& ctx, std::uint64_t q,
                                       bool allow_nonsplit = false);

// ---------------------------------------------------------------------------
// Number-field variant over k = Q at a finite cyclotomic level.

struct FunctionField {
  std::uint64_t q = 0;
};

/// A character phi: (Z/M)^* -> N/G, given by a lift in N for each unit.
struct RationalNumberField {
  std::uint64_t modulus = 0;
  std::map<std::uint64_t, Permutation> phi;
};

using FieldSpec = std::variant<FunctionField, RationalNumberField>;

/// Units of Z/M as representatives in [1, M) (just {1} for M = 1).
std::vector<std::uint64_t> units_mod(std::uint64_t m);

/// Orbit count of C(G) under g -> h^{-1} g^u h, h a lift of phi(u), over all
/// units u. Throws BadModulus if exp(G) does not divide M, NotAHomomorphism
/// if phi is not a homomorphism into N/G.
std::size_t b_phi(const FiniteGroup& n, const FiniteGroup& g, const FieldSpec& field);

/// All surjective homomorphisms (Z/M)^* -> N/G, lifts chosen as least coset
/// elements. Order is deterministic.
std::vector<RationalNumberField> surjective_characters(const FiniteGroup& n, const FiniteGroup& g,
                                                       std::uint64_t modulus);

enum class QuotientFilter { Abelian, Cyclic };

struct RevisedRow {
  FiniteGroup g;
  Rational a;
  bool quotient_abelian = false;
  bool quotient_cyclic = false;
  bool split = false;
  bool included = false;
  std::optional<std::size_t> b;
  std::string note;
};

struct RevisedReport {
  std::size_t b = 0;
  Rational a;
  std::vector<RevisedRow> rows;  // one row per normal G passing the filter
};

/// b(N, k): the maximum of b(G, N, k) over normal G passing the quotient
/// filter with a(G) = a(N). For a function field only split G with cyclic
/// quotient contribute; for Q (modulus 0 means exp(N)) every surjective phi
/// at the given level is tried. Throws NoAdmissibleSubgroup.
RevisedReport revised_b(const FiniteGroup& n, const FieldSpec& field,
                        QuotientFilter filter = QuotientFilter::Abelian);

}  // namespace malle
