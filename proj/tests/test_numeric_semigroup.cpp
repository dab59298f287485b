#include <gtest/gtest.h>

#include <algorithm>

#include "gapcount/errors.hpp"
#include "gapcount/numeric_semigroup.hpp"
#include "gapcount/splitmix.hpp"

using namespace gapcount;

namespace {

GeneratorSet set(std::initializer_list<unsigned long> values) {
  std::vector<Natural> v;
  for (auto x : values) v.emplace_back(x);
  return GeneratorSet(std::move(v));
}

std::vector<std::uint64_t> u64s(std::initializer_list<std::uint64_t> values) {
  return values;
}

// Plain per-entry DP used as a reference for the word-level closure.
std::vector<bool> naive_table(const std::vector<std::uint64_t>& gens, std::uint64_t bound) {
  std::vector<bool> t(bound + 1, false);
  t[0] = true;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    for (auto g : gens) {
      if (g <= n && t[n - g]) {
        t[n] = true;
        break;
      }
    }
  }
  return t;
}

GeneratorSet random_coprime_set(SplitMix64& rng, std::uint64_t max_element) {
  for (;;) {
    std::size_t size = 2 + rng.below(4);
    std::vector<Natural> v;
    for (std::size_t i = 0; i < size; ++i) v.push_back(natural(2 + rng.below(max_element - 1)));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() < 2) continue;
    GeneratorSet a(v);
    if (is_coprime(a)) return a;
  }
}

}  // namespace

TEST(GeneratorSet, SortsAndValidates) {
  auto a = set({15, 6, 11});
  EXPECT_EQ(a.elements(), (std::vector<Natural>{6, 11, 15}));
  EXPECT_EQ(a.min(), 6);
  EXPECT_EQ(a.max(), 15);
  EXPECT_THROW(set({5}), PreconditionError);
  EXPECT_THROW(set({1, 5}), PreconditionError);
  EXPECT_THROW(set({5, 7, 5}), PreconditionError);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_of_set(set({6, 11, 15})), 1);
  EXPECT_EQ(gcd_of_set(set({6, 9, 15})), 3);
  EXPECT_EQ(gcd_of_set(set({8, 12, 13})), 1);
  EXPECT_FALSE(is_coprime(set({6, 9, 15})));
}

TEST(IsRepresentable, Examples) {
  EXPECT_TRUE(is_representable(set({6, 11, 15}), 17));
  EXPECT_FALSE(is_representable(set({6, 11, 15}), 19));
  EXPECT_FALSE(is_representable(set({8, 12, 13}), 30));
  EXPECT_TRUE(is_representable(set({8, 12, 13}), 0));
}

TEST(RepresentabilityPrefix, SmallTables) {
  auto t = representability_prefix(set({2, 3}), 5);
  std::vector<bool> got;
  for (std::uint64_t n = 0; n <= 5; ++n) got.push_back(t[n]);
  EXPECT_EQ(got, (std::vector<bool>{true, false, true, true, true, true}));

  auto u = representability_prefix(set({6, 11, 15}), 19);
  EXPECT_EQ(u.gaps(1, 19), u64s({1, 2, 3, 4, 5, 7, 8, 9, 10, 13, 14, 16, 19}));

  auto v = representability_prefix(set({8, 12, 13}), 31);
  EXPECT_TRUE(v[28]);
  EXPECT_TRUE(v[29]);
  EXPECT_FALSE(v[30]);
  EXPECT_FALSE(v[31]);
}

TEST(RepresentabilityPrefix, MatchesNaiveDp) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> gens;
    std::size_t size = 2 + rng.below(4);
    for (std::size_t i = 0; i < size; ++i) {
      // Mix narrow (< 64) and wide (>= 64) generators to cover both closures.
      gens.push_back(2 + rng.below(trial % 2 ? 60 : 300));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() < 2) continue;
    std::vector<Natural> v;
    for (auto g : gens) v.push_back(natural(g));
    std::uint64_t bound = 1 + rng.below(2000);
    RepresentabilityTable table(GeneratorSet(v), bound);
    auto ref = naive_table(gens, bound);
    for (std::uint64_t n = 0; n <= bound; ++n) {
      ASSERT_EQ(table[n], ref[n]) << "n=" << n << " trial=" << trial;
    }
    EXPECT_EQ(table.count_gaps(0, bound),
              static_cast<std::uint64_t>(std::count(ref.begin(), ref.end(), false)));
  }
}

TEST(RepresentabilityPrefix, BudgetRefusal) {
  EXPECT_THROW(representability_prefix(set({2, 3}), 1000, 1000), ResourceError);
  EXPECT_NO_THROW(representability_prefix(set({2, 3}), 999, 1000));
  EXPECT_THROW(is_representable(set({2, 3}), pow2(80)), ResourceError);
}

TEST(RepresentabilityPrefix, HugeGeneratorsAreOutOfRange) {
  std::vector<Natural> v{natural(3), pow2(100), pow2(100) + 1};
  auto t = representability_prefix(GeneratorSet(v), 10);
  EXPECT_EQ(t.gaps(1, 10), u64s({1, 2, 4, 5, 7, 8, 10}));
}

TEST(GapsInInterval, Examples) {
  auto r = gaps_in_interval(set({6, 11, 15}), 1, 19);
  EXPECT_EQ(r.gaps, u64s({1, 2, 3, 4, 5, 7, 8, 9, 10, 13, 14, 16, 19}));
  EXPECT_EQ(r.count, 13U);
  EXPECT_EQ(gaps_in_interval(set({8, 12, 13}), 28, 31).gaps, u64s({30, 31}));
  auto s = gaps_in_interval(set({2, 3}), 1, 5);
  EXPECT_EQ(s.gaps, u64s({1}));
  EXPECT_EQ(s.count, 1U);
}

TEST(GapsInInterval, NonCoprimeAllowedAndEmptyIntervalRejected) {
  auto r = gaps_in_interval(set({6, 9, 15}), 1, 12);
  EXPECT_EQ(r.gaps, u64s({1, 2, 3, 4, 5, 7, 8, 10, 11}));
  EXPECT_THROW(gaps_in_interval(set({2, 3}), 5, 4), PreconditionError);
}

TEST(CountGapsFrom, Examples) {
  EXPECT_EQ(count_gaps_from(set({6, 11, 15}), 1).count, 16U);
  EXPECT_EQ(count_gaps_from(set({2, 3}), 2).count, 0U);
  auto r = count_gaps_from(set({8, 12, 13, 27}), 28);
  EXPECT_EQ(r.gaps, u64s({30, 31}));
  EXPECT_EQ(r.count, 2U);
  EXPECT_FALSE(r.hi.has_value());
  EXPECT_THROW(count_gaps_from(set({6, 9, 15}), 1), PreconditionError);
}

TEST(CountAllGaps, Examples) {
  auto a = count_all_gaps(set({6, 11, 15}));
  EXPECT_EQ(a.gaps, u64s({1, 2, 3, 4, 5, 7, 8, 9, 10, 13, 14, 16, 19, 20, 25, 31}));
  EXPECT_EQ(frobenius_number(set({6, 11, 15})), 31);

  EXPECT_EQ(count_all_gaps(set({12, 19, 51, 53})).count, 60U);
  EXPECT_EQ(frobenius_number(set({12, 19, 51, 53})), 109);

  EXPECT_EQ(count_all_gaps(set({2, 3})).count, 1U);
  EXPECT_EQ(frobenius_number(set({2, 3})), 1);

  // The ten-gap list 1..19 belongs to <5, 6>.
  EXPECT_EQ(count_all_gaps(set({5, 6})).gaps, u64s({1, 2, 3, 4, 7, 8, 9, 13, 14, 19}));
  EXPECT_THROW(frobenius_number(set({6, 9, 15})), PreconditionError);
}

TEST(Sylvester, Examples) {
  EXPECT_EQ(sylvester_count(2, 3), 1);
  EXPECT_EQ(sylvester_count(6, 11), 25);
  EXPECT_EQ(sylvester_count(12, 19), 99);
  EXPECT_EQ(count_all_gaps(set({6, 11})).count, 25U);
  EXPECT_EQ(count_all_gaps(set({12, 19})).count, 99U);
  EXPECT_THROW(sylvester_count(6, 9), PreconditionError);
  EXPECT_THROW(sylvester_count(3, 3), PreconditionError);
}

TEST(Sylvester, AllPairsUpTo60) {
  for (unsigned long a1 = 2; a1 <= 60; ++a1) {
    for (unsigned long a2 = a1 + 1; a2 <= 60; ++a2) {
      if (gcd(Natural(a1), Natural(a2)) != 1) continue;
      ASSERT_EQ(natural(count_all_gaps(set({a1, a2})).count), sylvester_count(a1, a2))
          << a1 << "," << a2;
    }
  }
}

TEST(StabilizationBound, Examples) {
  EXPECT_EQ(stabilization_bound(set({6, 11, 15})), 32);
  EXPECT_EQ(stabilization_bound(set({2, 3})), 2);
  EXPECT_EQ(stabilization_bound(set({8, 12, 13})), 44);
  EXPECT_THROW(stabilization_bound(set({4, 6})), PreconditionError);
}

TEST(Properties, FrobeniusBelowMaxSquared) {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_coprime_set(rng, 200);
    EXPECT_LT(frobenius_number(a), a.max() * a.max());
  }
}

TEST(Properties, MonotoneUnderSupersets) {
  SplitMix64 rng(12);
  for (int i = 0; i < 100; ++i) {
    auto a1 = random_coprime_set(rng, 80);
    std::vector<Natural> bigger = a1.elements();
    bigger.push_back(natural(2 + rng.below(120)));
    std::sort(bigger.begin(), bigger.end());
    bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
    GeneratorSet a2(bigger);
    auto n1 = count_all_gaps(a1).gaps;
    auto n2 = count_all_gaps(a2).gaps;
    EXPECT_TRUE(std::includes(n1.begin(), n1.end(), n2.begin(), n2.end()));
  }
}

TEST(Properties, TailStabilizesAndIntervalAgrees) {
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto a = random_coprime_set(rng, 100);
    auto b = *to_u64(stabilization_bound(a));
    auto min = *to_u64(a.min());
    auto t = representability_prefix(a, natural(b + 3 * min));
    EXPECT_EQ(t.count_gaps(b, b + 3 * min), 0U);
    if (b > 1) EXPECT_FALSE(t[b - 1]);
    EXPECT_EQ(gaps_in_interval(a, 1, natural(b)).gaps, count_all_gaps(a).gaps);
  }
}
