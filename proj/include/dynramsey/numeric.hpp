#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynramsey {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Positive rational p/q used for the base alpha of the adapted metric.
struct Ratio {
  std::uint64_t num = 2;
  std::uint64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Parses "p/q" or "p". Throws Error(InvalidArgument) on malformed input.
Ratio parse_ratio(std::string_view text);

/// base^exponent with exact arithmetic.
BigInt pow_big(std::uint64_t base, std::uint64_t exponent);

/// base^exponent, or nullopt once the power exceeds `cap`.
std::optional<std::uint64_t> pow_capped(std::uint64_t base, std::uint64_t exponent,
                                        std::uint64_t cap);

/// Exact n > e^j for j >= 0, decided by rational brackets of e from its series
/// (partial sums below, partial sum + 1/(m! m) above), refined until they
/// separate. Terminates because e^j is irrational for j >= 1.
bool exceeds_exp(const BigInt& n, int j);

/// Largest j with e^j <= n, for n >= 1.
int floor_ln(const BigInt& n);

/// Smallest integer strictly greater than e^j (1 for j = 0).
BigInt ceil_exp(int j);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t value);

}  // namespace dynramsey
