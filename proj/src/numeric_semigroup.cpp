#include <algorithm>

#include "gapcount/errors.hpp"
#include "gapcount/numeric_semigroup.hpp"

namespace gapcount {

namespace {

std::uint64_t table_bound(const Natural& n, std::uint64_t budget_entries) {
  auto v = to_u64(n);
  if (!v || *v >= budget_entries) {
    throw ResourceError("table bound " + to_decimal(n) +
                        " exceeds the entry budget " +
                        std::to_string(budget_entries));
  }
  return *v;
}

void require_coprime(const GeneratorSet& generators, const char* what) {
  if (!is_coprime(generators)) {
    throw PreconditionError(std::string(what) +
                            " requires coprime generators (gcd is " +
                            to_decimal(gcd_of_set(generators)) + ")");
  }
}

}  // namespace

Natural gcd_of_set(const GeneratorSet& generators) {
  Natural g = 0;
  for (const auto& a : generators.elements()) g = gcd(g, a);
  return g;
}

bool is_coprime(const GeneratorSet& generators) {
  return gcd_of_set(generators) == 1;
}

bool is_representable(const GeneratorSet& generators, const Natural& n,
                      std::uint64_t budget_entries) {
  if (sgn(n) < 0) return false;
  if (n == 0) return true;
  return representability_prefix(generators, n, budget_entries)
      .representable(*to_u64(n));
}

RepresentabilityTable representability_prefix(const GeneratorSet& generators,
                                              const Natural& bound,
                                              std::uint64_t budget_entries) {
  return RepresentabilityTable(generators, table_bound(bound, budget_entries),
                               budget_entries);
}

GapReport gaps_in_interval(const GeneratorSet& generators, const Natural& lo,
                           const Natural& hi, std::uint64_t budget_entries) {
  if (sgn(lo) < 0 || lo > hi) {
    throw PreconditionError("interval [" + to_decimal(lo) + ", " +
                            to_decimal(hi) + "] is empty or negative");
  }
  auto table = representability_prefix(generators, hi, budget_entries);
  GapReport report{lo, hi, {}, 0};
  // 0 is always representable, so starting the scan at lo is safe.
  report.gaps = table.gaps(*to_u64(lo), table.bound());
  report.count = report.gaps.size();
  return report;
}

RepresentabilityTable stabilized_table(const GeneratorSet& generators,
                                       std::uint64_t budget_entries) {
  require_coprime(generators, "tail enumeration");
  const std::uint64_t min = table_bound(generators.min(), budget_entries);
  // g(A) < max(A)^2, so a table through max(A)^2 + min(A) always suffices.
  Natural cap = generators.max() * generators.max() + generators.min();
  if (cap >= budget_entries) cap = natural(budget_entries - 1);
  Natural bound = generators.max() + generators.min();
  for (;;) {
    if (bound > cap) bound = cap;
    RepresentabilityTable table(generators, *to_u64(bound), budget_entries);
    if (table.bound() - table.last_gap().value_or(0) >= min) return table;
    if (bound == cap) {
      throw ResourceError("semigroup did not stabilize within " +
                          to_decimal(bound) + " table entries");
    }
    bound *= 2;
  }
}

Natural stabilization_bound(const GeneratorSet& generators,
                            std::uint64_t budget_entries) {
  auto table = stabilized_table(generators, budget_entries);
  return natural(table.last_gap().value_or(0) + 1);
}

GapReport count_gaps_from(const GeneratorSet& generators, const Natural& from,
                          std::uint64_t budget_entries) {
  if (sgn(from) < 0) throw PreconditionError("negative lower bound");
  auto table = stabilized_table(generators, budget_entries);
  GapReport report{from, std::nullopt, {}, 0};
  if (auto lo = to_u64(from); lo && *lo <= table.bound()) {
    report.gaps = table.gaps(*lo, table.bound());
  }
  report.count = report.gaps.size();
  return report;
}

GapReport count_all_gaps(const GeneratorSet& generators,
                         std::uint64_t budget_entries) {
  return count_gaps_from(generators, 1, budget_entries);
}

Natural frobenius_number(const GeneratorSet& generators,
                         std::uint64_t budget_entries) {
  auto table = stabilized_table(generators, budget_entries);
  // min(A) >= 2 makes 1 a gap, so a last gap always exists.
  return natural(*table.last_gap());
}

Natural sylvester_count(const Natural& a1, const Natural& a2) {
  if (a1 < 2 || a2 <= a1) {
    throw PreconditionError("Sylvester count needs 2 <= a1 < a2");
  }
  if (gcd(a1, a2) != 1) {
    throw PreconditionError("Sylvester count needs a coprime pair");
  }
  return (a1 - 1) * (a2 - 1) / 2;
}

}  // namespace gapcount
