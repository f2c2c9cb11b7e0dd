#include <cmath>
#include <limits>

#include "malle/error.hpp"
#include "malle/series.hpp"

namespace malle {

namespace {

double big_log(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log(v.convert_to<double>());
  // leading 53 bits as a mantissa
  double mant = 0;
  for (std::size_t i = 0; i < 53; ++i) mant = 2 * mant + (boost::multiprecision::bit_test(v, bits - i) ? 1 : 0);
  return std::log(mant) + static_cast<double>(bits - 52) * std::log(2.0);
}

struct Spread {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  void add(double r) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  double value() const { return lo > 0 ? hi / lo : std::numeric_limits<double>::infinity(); }
};

}  // namespace

FitSummary tauberian_fit(const CoefficientTable& table, const PoleReport& pole, const FitOptions& options) {
  return tauberian_fit(table, pole.a, pole.b, options.stride ? options.stride : pole.period, options);
}

FitSummary tauberian_fit(const CoefficientTable& table, const Rational& a, std::size_t b, std::size_t stride,
                         const FitOptions& options) {
  const std::size_t R = table.terms();
  if (table.values.empty() || R < options.min_terms)
    throw Error(ErrorCode::InsufficientRange,
                "need at least " + std::to_string(options.min_terms) + " terms, have " + std::to_string(R));
  FitSummary fit;
  fit.a = a;
  fit.b = b;
  fit.stride = stride ? stride : 1;
  fit.window = options.window;

  const double lnq = std::log(static_cast<double>(table.q));
  const double ad = a.convert_to<double>();
  std::vector<BigInt> partial(R + 1, BigInt(0));  // partial[R'] = sum_{r < R'} h(r)
  for (std::size_t r = 1; r <= R; ++r) partial[r] = partial[r - 1] + table.values[r - 1];

  Spread aligned, every;
  for (std::size_t x = (R + 1) / 2; x <= R; ++x) {
    if (x == 0) continue;
    const double lnx = static_cast<double>(x) * lnq;
    const double ln_ratio = big_log(partial[x]) - ad * lnx - static_cast<double>(b > 0 ? b - 1 : 0) * std::log(lnx);
    const double ratio = std::exp(ln_ratio);
    every.add(ratio);
    if (x % fit.stride == 0) {
      aligned.add(ratio);
      fit.checkpoints.push_back({x, partial[x], ratio});
    }
  }
  fit.min_ratio = aligned.lo;
  fit.max_ratio = aligned.hi;
  fit.spread = aligned.value();
  fit.unaligned_spread = every.value();
  fit.bounded = fit.checkpoints.size() >= 2 && std::isfinite(fit.spread) && fit.spread <= fit.window;
  return fit;
}

}  // namespace malle
