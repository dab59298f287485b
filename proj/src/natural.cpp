#include "gapcount/natural.hpp"

#include <algorithm>
#include <cctype>

#include "gapcount/errors.hpp"

namespace gapcount {

Natural pow2(std::uint64_t exponent) {
  Natural result;
  mpz_setbit(result.get_mpz_t(), exponent);
  return result;
}

std::uint64_t popcount(const Natural& n) {
  if (sgn(n) < 0) throw PreconditionError("popcount of a negative integer");
  return mpz_popcount(n.get_mpz_t());
}

bool test_bit(const Natural& n, std::uint64_t bit) {
  return mpz_tstbit(n.get_mpz_t(), bit) != 0;
}

std::optional<std::uint64_t> to_u64(const Natural& n) {
  if (sgn(n) < 0 || !mpz_fits_ulong_p(n.get_mpz_t())) return std::nullopt;
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

std::string to_decimal(const Natural& n) { return n.get_str(10); }

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("not a nonnegative decimal integer: '" +
                     std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

}  // namespace gapcount
