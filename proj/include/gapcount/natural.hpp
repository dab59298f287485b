#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gapcount {

/// Arbitrary-precision integer. Every generator, endpoint and count that can
/// outgrow a machine word is carried as a Natural.
using Natural = mpz_class;

inline Natural natural(std::uint64_t value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Natural(static_cast<unsigned long>(value));
}

Natural pow2(std::uint64_t exponent);

/// Number of ones in the binary representation of a nonnegative integer.
std::uint64_t popcount(const Natural& n);

bool test_bit(const Natural& n, std::uint64_t bit);

/// Value as a machine word, or nullopt when negative or wider than 64 bits.
std::optional<std::uint64_t> to_u64(const Natural& n);

std::string to_decimal(const Natural& n);

/// Parses a nonnegative decimal integer; throws ParseError otherwise.
Natural parse_natural(std::string_view text);

Natural gcd(const Natural& a, const Natural& b);

}  // namespace gapcount
