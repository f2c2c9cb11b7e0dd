#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace malle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// q = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint64_t q);

/// All prime powers in [2, bound) coprime to `modulus`.
std::vector<std::uint64_t> prime_powers_coprime_to(std::uint64_t modulus, std::uint64_t bound);

BigInt big_pow(std::uint64_t base, std::size_t exponent);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

}  // namespace malle
