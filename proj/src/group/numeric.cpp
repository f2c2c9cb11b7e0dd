#include "malle/numeric.hpp"

#include <numeric>

namespace malle {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<std::uint64_t> prime_powers_coprime_to(std::uint64_t modulus, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q < bound; ++q) {
    if (is_prime_power(q) && std::gcd(q, modulus) == 1) out.push_back(q);
  }
  return out;
}

BigInt big_pow(std::uint64_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace malle
