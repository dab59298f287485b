#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapcount/natural.hpp"

namespace gapcount {

/// Default ceiling on representability-table entries (2^31 bits, 256 MiB).
inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 31;

/// Strictly increasing set of at least two integers, each >= 2.
///
/// Coprimality is not part of the invariant: interval queries accept
/// non-coprime sets, while tail queries check it explicitly.
class GeneratorSet {
 public:
  /// Sorts `elements`; throws PreconditionError on duplicates, on fewer than
  /// two elements or on an element below 2.
  explicit GeneratorSet(std::vector<Natural> elements);

  const std::vector<Natural>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Natural& min() const { return elements_.front(); }
  const Natural& max() const { return elements_.back(); }

  bool operator==(const GeneratorSet&) const = default;

 private:
  std::vector<Natural> elements_;
};

/// Membership bits of S(A) for 0..bound, packed 64 per word.
class RepresentabilityTable {
 public:
  /// One forward pass per generator; throws ResourceError when bound + 1
  /// exceeds `budget_entries`.
  RepresentabilityTable(GeneratorSet generators, std::uint64_t bound,
                        std::uint64_t budget_entries = kDefaultTableBudget);

  const GeneratorSet& generators() const { return generators_; }
  std::uint64_t bound() const { return bound_; }

  bool representable(std::uint64_t n) const {
    return (words_[n >> 6] >> (n & 63)) & 1U;
  }
  bool operator[](std::uint64_t n) const { return representable(n); }

  /// Gaps in [lo, min(hi, bound)], ascending.
  std::vector<std::uint64_t> gaps(std::uint64_t lo, std::uint64_t hi) const;
  std::uint64_t count_gaps(std::uint64_t lo, std::uint64_t hi) const;
  std::uint64_t count_representable(std::uint64_t lo, std::uint64_t hi) const;

  /// Largest gap in [1, bound], if any.
  std::optional<std::uint64_t> last_gap() const;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  GeneratorSet generators_;
  std::uint64_t bound_;
  std::vector<std::uint64_t> words_;
};

/// Gaps of S(A) inside a closed interval; `hi` empty means infinity.
struct GapReport {
  Natural lo;
  std::optional<Natural> hi;
  /// Gaps always lie below the table budget, so they fit a machine word.
  std::vector<std::uint64_t> gaps;
  std::uint64_t count = 0;
};

Natural gcd_of_set(const GeneratorSet& generators);
bool is_coprime(const GeneratorSet& generators);

bool is_representable(const GeneratorSet& generators, const Natural& n,
                      std::uint64_t budget_entries = kDefaultTableBudget);

RepresentabilityTable representability_prefix(
    const GeneratorSet& generators, const Natural& bound,
    std::uint64_t budget_entries = kDefaultTableBudget);

/// Exact N(A) ∩ [lo, hi]; A need not be coprime.
GapReport gaps_in_interval(const GeneratorSet& generators, const Natural& lo,
                           const Natural& hi,
                           std::uint64_t budget_entries = kDefaultTableBudget);

/// Exact N(A) ∩ [from, ∞). Requires gcd(A) = 1.
GapReport count_gaps_from(const GeneratorSet& generators, const Natural& from,
                          std::uint64_t budget_entries = kDefaultTableBudget);

/// Exact N(A). Requires gcd(A) = 1.
GapReport count_all_gaps(const GeneratorSet& generators,
                         std::uint64_t budget_entries = kDefaultTableBudget);

/// max N(A). Requires gcd(A) = 1.
Natural frobenius_number(const GeneratorSet& generators,
                         std::uint64_t budget_entries = kDefaultTableBudget);

/// (a1 - 1)(a2 - 1) / 2 for a coprime pair 2 <= a1 < a2.
Natural sylvester_count(const Natural& a1, const Natural& a2);

/// Least B with [B, B + min(A) - 1] ⊆ S(A); every n >= B is then
/// representable. Requires gcd(A) = 1. Always at most max(A)^2.
Natural stabilization_bound(const GeneratorSet& generators,
                            std::uint64_t budget_entries = kDefaultTableBudget);

/// Table that reaches past the stabilization point by at least min(A)
/// entries, grown geometrically from max(A) + min(A).
RepresentabilityTable stabilized_table(
    const GeneratorSet& generators,
    std::uint64_t budget_entries = kDefaultTableBudget);

}  // namespace gapcount
