#include <algorithm>
#include <bit>

#include "gapcount/errors.hpp"
#include "gapcount/numeric_semigroup.hpp"

namespace gapcount {

GeneratorSet::GeneratorSet(std::vector<Natural> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (elements_.size() < 2) {
    throw PreconditionError("a generator set needs at least two elements");
  }
  if (elements_.front() < 2) {
    throw PreconditionError("generators must be at least 2, got " +
                            to_decimal(elements_.front()));
  }
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) {
    throw PreconditionError("duplicate generator " + to_decimal(*dup));
  }
}

namespace {

// Bits [start, start + 64) of the table; positions below zero read as 0.
std::uint64_t load64(const std::vector<std::uint64_t>& words,
                     std::int64_t start) {
  if (start <= -64) return 0;
  if (start < 0) return words[0] << static_cast<unsigned>(-start);
  auto word = static_cast<std::size_t>(start >> 6);
  auto shift = static_cast<unsigned>(start & 63);
  std::uint64_t lo = words[word] >> shift;
  if (shift == 0 || word + 1 >= words.size()) return lo;
  return lo | (words[word + 1] << (64 - shift));
}

// Closes the table under +g, sweeping words in increasing order so every
// source word is final before it is read.
void close_under(std::vector<std::uint64_t>& words, std::uint64_t g) {
  const std::size_t first = g >> 6;
  if (g >= 64) {
    for (std::size_t k = first; k < words.size(); ++k) {
      words[k] |= load64(words, static_cast<std::int64_t>(k * 64) -
                                    static_cast<std::int64_t>(g));
    }
    return;
  }
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::uint64_t x = words[k];
    if (k > 0) x |= words[k - 1] >> (64 - g);
    for (std::uint64_t step = g; step < 64; step <<= 1) x |= x << step;
    words[k] = x;
  }
}

std::uint64_t mask_from(unsigned bit) { return ~std::uint64_t{0} << bit; }
std::uint64_t mask_through(unsigned bit) {
  return bit == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bit + 1)) - 1;
}

}  // namespace

RepresentabilityTable::RepresentabilityTable(GeneratorSet generators,
                                             std::uint64_t bound,
                                             std::uint64_t budget_entries)
    : generators_(std::move(generators)), bound_(bound) {
  if (bound >= budget_entries) {
    throw ResourceError("representability table of " +
                        std::to_string(bound) + " + 1 entries exceeds budget " +
                        std::to_string(budget_entries));
  }
  words_.assign((bound >> 6) + 1, 0);
  words_[0] = 1;
  for (const auto& gen : generators_.elements()) {
    auto g = to_u64(gen);
    if (!g || *g > bound) break;  // sorted: the rest are out of range too
    close_under(words_, *g);
  }
  // Bits past `bound` in the last word are not part of the table.
  words_.back() &= mask_through(static_cast<unsigned>(bound & 63));
}

std::uint64_t RepresentabilityTable::count_representable(
    std::uint64_t lo, std::uint64_t hi) const {
  hi = std::min(hi, bound_);
  if (lo > hi) return 0;
  std::size_t wlo = lo >> 6, whi = hi >> 6;
  auto blo = static_cast<unsigned>(lo & 63), bhi = static_cast<unsigned>(hi & 63);
  if (wlo == whi) {
    return std::popcount(words_[wlo] & mask_from(blo) & mask_through(bhi));
  }
  std::uint64_t total = std::popcount(words_[wlo] & mask_from(blo));
  for (std::size_t k = wlo + 1; k < whi; ++k) total += std::popcount(words_[k]);
  total += std::popcount(words_[whi] & mask_through(bhi));
  return total;
}

std::uint64_t RepresentabilityTable::count_gaps(std::uint64_t lo,
                                                std::uint64_t hi) const {
  hi = std::min(hi, bound_);
  if (lo > hi) return 0;
  return (hi - lo + 1) - count_representable(lo, hi);
}

std::vector<std::uint64_t> RepresentabilityTable::gaps(std::uint64_t lo,
                                                       std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  hi = std::min(hi, bound_);
  if (lo > hi) return out;
  for (std::size_t k = lo >> 6; k <= (hi >> 6); ++k) {
    std::uint64_t missing = ~words_[k];
    if (k == (lo >> 6)) missing &= mask_from(static_cast<unsigned>(lo & 63));
    if (k == (hi >> 6)) missing &= mask_through(static_cast<unsigned>(hi & 63));
    while (missing != 0) {
      out.push_back(k * 64 + static_cast<std::uint64_t>(std::countr_zero(missing)));
      missing &= missing - 1;
    }
  }
  return out;
}

std::optional<std::uint64_t> RepresentabilityTable::last_gap() const {
  for (std::size_t k = words_.size(); k-- > 0;) {
    std::uint64_t missing = ~words_[k];
    if (k + 1 == words_.size()) {
      missing &= mask_through(static_cast<unsigned>(bound_ & 63));
    }
    if (missing != 0) {
      return k * 64 + 63 - static_cast<std::uint64_t>(std::countl_zero(missing));
    }
  }
  return std::nullopt;
}

}  // namespace gapcount
