#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "malle/invariants.hpp"
#include "malle/nielsen.hpp"
#include "malle/numeric.hpp"

namespace malle {

/// Denominator factor 1 - q^{coefficient_exponent} u^{variable_exponent}.
struct EulerFactor {
  std::size_t coefficient_exponent = 0;  // block size
  std::size_t variable_exponent = 0;  // block weight
  friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
  friend auto operator<=>(const EulerFactor&, const EulerFactor&) = default;
};

/// prod 1 / (1 - q^{c} u^{r}) as a formal power series in u = q^{-s}.
struct RationalGF {
  std::uint64_t q = 0;
  std::size_t e = 1;
  std::vector<EulerFactor> factors;
};

/// One factor per block, in block order. Throws TrivialClassPresent for a
/// block of index 0 and InvalidArgument when blocks mix twist parameters.
RationalGF euler_product(std::span<const OrbitBlock> blocks, std::uint64_t q);

struct CoefficientTable {
  std::uint64_t q = 0;
  std::size_t e = 1;
  std::vector<BigInt> values;  // values[r], r = 0..R

  std::size_t terms() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Exact coefficients up to u^R by convolving geometric series.
CoefficientTable expand(const RationalGF& gf, std::size_t R);

/// Independent oracle: sums q^{sum a_O |O|} over all multiplicity vectors
/// (a_O) with sum a_O r(O) <= R.
CoefficientTable brute_force_h3(std::span<const OrbitBlock> blocks, std::uint64_t q, std::size_t R);

struct PoleReport {
  Rational a;  // max |O| / r(O)
  std::size_t b = 0;  // number of factors attaining it
  double dominant_radius = 0;  // u* = q^{-a}
  std::size_t period = 1;  // gcd of all variable exponents
  std::size_t equal_modulus_poles = 0;  // other poles on |u| = u*
};

/// Throws InvalidArgument for an empty product.
PoleReport dominant_pole(const RationalGF& gf);

struct FitOptions {
  double window = 10.0;
  std::size_t min_terms = 40;
  std::size_t stride = 0;  // 0: use the pole report's period
};

struct FitCheckpoint {
  std::size_t R = 0;  // X = q^R
  BigInt partial_sum;  // sum_{r < R} h(r)
  double ratio = 0;
};

struct FitSummary {
  Rational a;
  std::size_t b = 0;
  std::size_t stride = 1;
  std::vector<FitCheckpoint> checkpoints;  // upper half, aligned to stride
  double min_ratio = 0;
  double max_ratio = 0;
  double spread = 0;  // max / min over the aligned checkpoints
  double unaligned_spread = 0;  // same, over every integer checkpoint
  double window = 10.0;
  bool bounded = false;
};

/// Ratio S(X) / (X^a (log X)^{b-1}) with S(X) = sum_{q^r < X} h(r), sampled
/// at X = q^R over the upper half of the table. Throws InsufficientRange.
FitSummary tauberian_fit(const CoefficientTable& table, const PoleReport& pole,
                         const FitOptions& options = {});
FitSummary tauberian_fit(const CoefficientTable& table, const Rational& a, std::size_t b,
                         std::size_t stride, const FitOptions& options = {});

struct DeskScaleTable {
  std::uint64_t q = 0;
  std::size_t e = 1;
  std::vector<BigInt> h2;  // values[r]
  std::vector<BigInt> h3;  // same class vectors, counted once each
  std::size_t class_vectors = 0;
  std::size_t max_orbit_count = 0;  // orbits in any single Ni(cv)
  std::size_t max_stable_count = 0;
  bool complete = true;
  std::size_t high_water_mark = 0;  // weights below this are exact
};

/// For every rational type-e class vector of weight <= R, counts braid
/// orbits (tuples up to G-conjugation) that the twist fixes and adds
/// count * q^{|cv|} to h2[r]. Stops at the first weight that exceeds the
/// Nielsen caps and returns the exact prefix with complete = false.
DeskScaleTable h2_desk_scale(const TwistSpec& spec, std::size_t R, const NielsenLimits& limits = {});

struct PropMainReport {
  std::size_t R = 0;
  std::optional<std::size_t> m;  // least shift with H3(R'-m) <= H2(R')
  Rational c1;  // least c with H2(R') <= c H3(R')
  bool violation = false;
  std::vector<std::string> notes;
};

/// Checks sum_{r<R'-m} h3 <= sum_{r<R'} h2 <= c1 sum_{r<R'} h3 over
/// checkpoints R' = 1..R, searching m in [0, R). A missing m or an
/// unbounded c1 is a violation.
PropMainReport prop_main_check(std::span<const BigInt> h2, std::span<const BigInt> h3, std::size_t R);
/// Throws EnumerationCapExceeded if the desk-scale table cannot reach R.
PropMainReport prop_main_check(const TwistSpec& spec, std::size_t R, const NielsenLimits& limits = {});

}  // namespace malle
