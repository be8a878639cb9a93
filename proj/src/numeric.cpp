#include "dynramsey/numeric.hpp"

#include <charconv>
#include <cstdio>

#include "dynramsey/error.hpp"

namespace dynramsey {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MismatchedSystems: return "MismatchedSystems";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::RangeTooSmall: return "RangeTooSmall";
    case ErrorCode::BadFormat: return "BadFormat";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::UnknownColor: return "UnknownColor";
    case ErrorCode::InconsistentCertificate: return "InconsistentCertificate";
  }
  return "Unknown";
}

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "not an unsigned integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  Ratio r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_u64(text);
    r.den = 1;
  } else {
    r.num = parse_u64(text.substr(0, slash));
    r.den = parse_u64(text.substr(slash + 1));
  }
  if (r.den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in ratio");
  return r;
}

BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<std::uint64_t> pow_capped(std::uint64_t base, std::uint64_t exponent,
                                        std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base == 0) return 0;
    if (result > cap / base) return std::nullopt;
    result *= base;
  }
  if (result > cap) return std::nullopt;
  return result;
}

namespace {

struct EBracket {
  BigRational lower;
  BigRational upper;
};

EBracket e_bracket(int terms) {
  BigRational sum = 0;
  BigInt factorial = 1;
  for (int i = 0; i <= terms; ++i) {
    if (i > 0) factorial *= i;
    sum += BigRational(1, factorial);
  }
  return {sum, sum + BigRational(1, factorial * terms)};
}

BigRational rational_pow(const BigRational& base, int exponent) {
  BigRational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

bool exceeds_exp(const BigInt& n, int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "exceeds_exp needs j >= 0");
  if (j == 0) return n > 1;
  const BigRational target(n);
  for (int terms = 24;; terms *= 2) {
    const auto bracket = e_bracket(terms);
    if (target >= rational_pow(bracket.upper, j)) return true;
    if (target <= rational_pow(bracket.lower, j)) return false;
  }
}

int floor_ln(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "floor_ln needs n >= 1");
  int j = 0;
  while (exceeds_exp(n, j + 1)) ++j;
  return j;
}

BigInt ceil_exp(int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "ceil_exp needs j >= 0");
  if (j == 0) return 1;
  const auto lower = rational_pow(e_bracket(24).lower, j);
  BigInt c = numerator(lower) / denominator(lower);
  while (!exceeds_exp(c, j)) ++c;
  return c;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= 0x100000001b3ULL;
  }
  return state;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace dynramsey
