#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gapcount/errors.hpp"
#include "gapcount/reduction.hpp"
#include "gapcount/splitmix.hpp"

using namespace gapcount;

namespace {

PartitionedFormula phi1() { return read_formula_file(DATA_DIR "/phi1.txt"); }
PartitionedFormula phi2() { return read_formula_file(DATA_DIR "/phi2.txt"); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string label(const Literal& l) {
  return (l.variable.block == Block::X ? "x" : "y") + std::to_string(l.variable.index) +
         (l.positive ? " 1" : " 0");
}

std::string beta_string(std::uint32_t beta, std::uint32_t width) {
  std::string out;
  for (std::uint32_t b = width; b-- > 0;) out += ((beta >> b) & 1U) ? '1' : '0';
  return out;
}

std::string tag_label(const Dummy& d) {
  std::string kind = d.tag.kind == TagKind::X ? "x" : d.tag.kind == TagKind::Y ? "y" : "c";
  return kind + std::to_string(d.tag.index) + " " +
         beta_string(d.beta, d.tag.kind == TagKind::X ? 3 : 2);
}

std::vector<std::pair<std::string, Natural>> h_rows(const PartitionedFormula& phi) {
  std::vector<std::pair<std::string, Natural>> rows;
  auto layout = layout_of(phi);
  for (const auto& l : all_literals(phi)) rows.emplace_back(label(l), h_literal(phi, layout, l));
  return rows;
}

}  // namespace

TEST(Layout, Examples) {
  EXPECT_EQ(layout_of(phi2()).d0(), 16384);
  EXPECT_EQ(layout_of(phi2()).width(), 14U);
  EXPECT_EQ(layout_of(phi1()).d0(), 67108864);
  EXPECT_EQ((ZoneLayout{2, 0, 2}).d0(), 1024);
}

TEST(Decompose, Examples) {
  auto layout = layout_of(phi2());
  auto z = decompose(layout, 92181);
  EXPECT_EQ(z.one_s, 5);
  EXPECT_EQ(z.c2, IndexSet{2});
  EXPECT_EQ(z.c1, IndexSet{2});
  EXPECT_TRUE(z.y2.empty());
  EXPECT_TRUE(z.y1.empty());
  EXPECT_EQ(z.x2, IndexSet{1});
  EXPECT_EQ(z.x1, IndexSet{1});
  EXPECT_EQ(z.xa, IndexSet{1});

  auto d = decompose(layout, 16384);
  EXPECT_EQ(d.one_s, 1);
  EXPECT_EQ(recompose(layout, d), 16384);
  EXPECT_EQ(decompose(layout, 0), ZoneDecomposition{});
}

TEST(Decompose, RoundTripUpToTwiceMu) {
  auto layout = layout_of(phi2());
  for (unsigned long n = 0; n <= 2 * 245759UL; n += 7) {
    ASSERT_EQ(recompose(layout, decompose(layout, n)), n);
  }
  auto big = layout_of(phi1());
  SplitMix64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    Natural n = natural(rng.next()) * natural(rng.next());
    ASSERT_EQ(recompose(big, decompose(big, n)), n);
  }
}

TEST(HLiteral, Phi2Values) {
  auto f = phi2();
  auto layout = layout_of(f);
  EXPECT_EQ(h_literal(f, layout, x(1)), 92181);
  EXPECT_EQ(h_literal(f, layout, x(1, false)), 87060);
  EXPECT_EQ(h_literal(f, layout, y(1)), 70976);
  std::vector<Natural> h;
  for (const auto& [_, v] : h_rows(f)) h.push_back(v);
  std::sort(h.begin(), h.end());
  EXPECT_EQ(h, (std::vector<Natural>{33088, 33408, 49192, 70976, 76416, 87060, 92181, 130090}));
  EXPECT_THROW(h_literal(f, layout, x(3)), PreconditionError);
}

TEST(ZoneTable, Goldens) {
  auto f2 = phi2();
  auto l2 = layout_of(f2);
  EXPECT_EQ(render_zone_table(layout_of(phi1()), h_rows(phi1())),
            slurp(GOLDEN_DIR "/phi1_h.txt"));
  EXPECT_EQ(render_zone_table(l2, h_rows(f2)), slurp(GOLDEN_DIR "/phi2_h.txt"));

  auto b = build_gaps_bundle(f2);
  EXPECT_EQ(render_zone_table(l2, {{"lambda", b.lambda}, {"mu", b.mu}}),
            slurp(GOLDEN_DIR "/phi2_interval.txt"));

  std::vector<std::pair<std::string, Natural>> plain, promoted;
  for (const auto& d : dummies_plus(f2, l2)) {
    (d.promoted ? promoted : plain).emplace_back(tag_label(d), d.value);
  }
  EXPECT_EQ(render_zone_table(l2, plain), slurp(GOLDEN_DIR "/phi2_dummies.txt"));
  EXPECT_EQ(render_zone_table(l2, promoted), slurp(GOLDEN_DIR "/phi2_promoted.txt"));
  EXPECT_EQ(render_zone_table(l2, {{"x2 110", b.extra_s1[0]}, {"x2 111", b.extra_s1[1]}}),
            slurp(GOLDEN_DIR "/phi2_s1_extras.txt"));
  EXPECT_EQ(render_zone_table(l2, {}), "row  1S  C2  C1  Y2  Y1  X2  X1  XA\n");
}

TEST(Popcount, Examples) {
  EXPECT_EQ(popcount(0), 0U);
  EXPECT_EQ(popcount(7), 3U);
  EXPECT_EQ(popcount(92181), 7U);
}

TEST(DummyInteger, Examples) {
  auto layout = layout_of(phi2());
  EXPECT_EQ(dummy_integer(layout, {TagKind::X, 1}, 0b010), 49160);
  EXPECT_EQ(dummy_integer(layout, {TagKind::X, 2}, 0b110), 49188);
  EXPECT_EQ(dummy_integer(layout, {TagKind::Y, 1}, 0b01), 32896);
  EXPECT_THROW(dummy_integer(layout, {TagKind::X, 1}, 0), PreconditionError);
  EXPECT_THROW(dummy_integer(layout, {TagKind::Y, 1}, 4), PreconditionError);
  EXPECT_THROW(dummy_integer(layout, {TagKind::Clause, 3}, 1), PreconditionError);
}

TEST(Bundles, Phi2) {
  auto f = phi2();
  auto n = reduce_to_nonrep(f);
  EXPECT_EQ(n.lambda, 245756);
  EXPECT_EQ(n.mu, 245759);
  EXPECT_EQ(n.t0().size(), 9U);
  EXPECT_TRUE(n.dummies_plus.empty());
  EXPECT_THROW(n.t1(), PreconditionError);

  auto b = build_bounded(f);
  EXPECT_EQ(b.dummies_plus.size(), 26U);
  EXPECT_EQ(b.t0().size(), 35U);
  auto t0 = b.t0();
  const auto& s0 = t0.elements();
  EXPECT_TRUE(std::binary_search(s0.begin(), s0.end(), Natural(65572)));
  EXPECT_TRUE(std::binary_search(s0.begin(), s0.end(), Natural(65574)));
  EXPECT_EQ(gcd_of_set(b.t0()), 1);

  auto g = build_gaps_bundle(f);
  EXPECT_EQ(g.t1().size(), 37U);
  EXPECT_EQ(g.f_closed_form, 4096);
  EXPECT_EQ(g.extra_s1, (std::vector<Natural>{49188, 49190}));
  std::vector<Natural> extra;
  auto g0 = g.t0();
  auto g1 = g.t1();
  std::set_difference(g1.elements().begin(), g1.elements().end(),
                      g0.elements().begin(), g0.elements().end(),
                      std::back_inserter(extra));
  EXPECT_EQ(extra, (std::vector<Natural>{49188, 49190}));
  EXPECT_EQ(gcd_of_set(g.t1()), 1);

  auto small = build_gaps_bundle(random_formula(3, 2, 1, 2));
  EXPECT_EQ(small.f_closed_form, 1024);
}

TEST(Bundles, StructuralInvariants) {
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    std::uint32_t k1 = 2 + rng.below(3), k2 = 2 + rng.below(3);
    std::uint32_t k3 = std::max<std::uint32_t>(2, (k1 + k2 + 2) / 3) + rng.below(2);
    auto f = random_formula(rng.next(), k1, k2, k3);
    auto b = build_gaps_bundle(f);
    EXPECT_EQ(b.h.size(), 2U * (k1 + k2));
    EXPECT_EQ(b.mu - b.lambda, pow2(k1) - 1);
    EXPECT_EQ(b.dummies_plus.size(), 7U * k1 + 3 * k2 + 3 * k3);
    EXPECT_EQ(gcd_of_set(b.t0()), 1);
    EXPECT_EQ(gcd_of_set(b.t1()), 1);
    std::size_t x_dummies = std::count_if(
        b.dummies_plus.begin(), b.dummies_plus.end(),
        [&](const Natural& v) { return v >= 3 * b.d0 && v < 4 * b.d0; });
    EXPECT_EQ(x_dummies, 7U * k1 - 2);

    auto lz = decompose(b.layout, b.lambda);
    auto mz = decompose(b.layout, b.mu);
    EXPECT_EQ(lz.one_s, b.layout.width());
    EXPECT_TRUE(lz.xa.empty());
    EXPECT_EQ(mz.xa.size(), k1);
    EXPECT_EQ(lz.x1.size(), k1);
    EXPECT_EQ(lz.c2.size(), k3);
    for (std::uint64_t sx = 0; sx < (1ULL << k1); ++sx) {
      auto z = decompose(b.layout, interval_member(b, sx));
      IndexSet expect;
      for (std::uint32_t i = 1; i <= k1; ++i) {
        if ((sx >> (i - 1)) & 1U) expect.push_back(i);
      }
      EXPECT_EQ(z.xa, expect);
    }
  }
}

TEST(Consistency, Examples) {
  auto layout = layout_of(phi2());
  EXPECT_TRUE(is_consistent(layout, 92181));
  EXPECT_FALSE(is_consistent(layout, 16384));
  EXPECT_TRUE(is_consistent(layout, 245756));
  for (const auto& h : reduce_to_nonrep(phi2()).h) EXPECT_TRUE(is_consistent(layout, h));
}

TEST(Consistency, DummiesAreNeverConsistent) {
  // Dummies carry a 1S weight without mirrored zones, so none is consistent
  // on its own; only H elements are.
  for (const auto& f : {phi1(), phi2()}) {
    auto layout = layout_of(f);
    auto dt = dummies_tilde_plus(f, layout);
    EXPECT_EQ(dt.size(), 7U * f.k1() + 3 * f.k2() + 3 * f.k3() + 2);
    for (const auto& d : dt) EXPECT_FALSE(is_consistent(layout, d));
  }
}

TEST(CarryFree, Examples) {
  auto f = phi2();
  auto layout = layout_of(f);
  auto hp = h_literal(f, layout, x(1));
  auto hn = h_literal(f, layout, x(2, false));
  EXPECT_TRUE(carry_free(layout, std::vector<Natural>{hp, hn}));
  EXPECT_FALSE(carry_free(layout, std::vector<Natural>{hp, hp}));
  EXPECT_TRUE(carry_free(layout, std::vector<Natural>{16384, 16384, 16384}));
}

TEST(CarryFree, PrefixConsistencyOnHMultisets) {
  SplitMix64 rng(31);
  for (const auto& f : {phi1(), phi2()}) {
    auto b = reduce_to_nonrep(f);
    for (int i = 0; i < 500; ++i) {
      std::vector<Natural> pick;
      std::size_t size = 1 + rng.below(8);
      for (std::size_t j = 0; j < size; ++j) pick.push_back(b.h[rng.below(b.h.size())]);
      EXPECT_EQ(prefix_consistent(b.layout, pick), carry_free(b.layout, pick));
    }
  }
}

TEST(Gadget, TruthTable) {
  Clause c(x(1), x(2), y(1));
  auto clauses = gadget_clauses(c, 2);
  ASSERT_EQ(clauses.size(), 7U);
  for (std::uint64_t z = 0; z < 8; ++z) {
    std::vector<std::uint64_t> extensions;
    for (std::uint64_t g = 0; g < 512; ++g) {
      // x1 = z1, x2 = z2, y1 = z3, x3..x11 = gadget bits.
      Assignment s(11, 1, (z & 3U) | (g << 2), (z >> 2) & 1U);
      bool all = std::all_of(clauses.begin(), clauses.end(), [&](const Clause& cl) {
        return true_literal_count(cl, s) == 1;
      });
      if (all) extensions.push_back(g);
    }
    EXPECT_EQ(extensions.size(), z == 0 ? 0U : 1U) << "z=" << z;
    if (z == 4) {
      // (z1, z2, z3) = (0, 0, 1): C2, C4, C8 true.
      EXPECT_EQ(bit_string(extensions.at(0), 9), "010100010");
    }
  }
}

TEST(Gadget, ShapeAndParsimony) {
  SplitMix64 rng(41);
  for (int i = 0; i < 30; ++i) {
    std::uint32_t k1 = 2 + rng.below(3);
    std::uint32_t k2 = 1 + rng.below(6 - k1);
    auto f = random_formula(rng.next(), k1, k2, 2);
    auto g = one_in_three_gadget(f);
    EXPECT_EQ(g.k3(), 7 * f.k3());
    EXPECT_EQ(g.k1() + g.k2(), f.k1() + f.k2() + 9 * f.k3());
    EXPECT_EQ(count_one_in_three(g), count_models(f)) << to_text(f);
  }
}

TEST(WitnessSums, Phi2) {
  auto s = enumerate_f_witness_sums(phi2());
  EXPECT_EQ(s.selections, 4096U);
  EXPECT_TRUE(s.distinct);
  EXPECT_EQ(s.sums.size(), 4096U);
  EXPECT_EQ(s.sums.front(), 49188U);
  EXPECT_EQ(s.sums.back(), 245759U);
  EXPECT_THROW(enumerate_f_witness_sums(phi1()), ResourceError);
}

TEST(Variant, Names) {
  for (auto v : {Variant::NonRep, Variant::BoundedGap, Variant::Gaps}) {
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_THROW(parse_variant("other"), ParseError);
}
