#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapcount/natural.hpp"
#include "gapcount/numeric_semigroup.hpp"
#include "gapcount/sat.hpp"

namespace gapcount {

/// Sorted 1-based indices.
using IndexSet = std::vector<std::uint32_t>;

/// Bit zones of a constructed integer, least significant first:
/// XA, X1, X2 (k1 bits each), Y1, Y2 (k2), C1, C2 (k3); the 1S zone is the
/// quotient by d0 = 2^width.
struct ZoneLayout {
  std::uint32_t k1 = 0;
  std::uint32_t k2 = 0;
  std::uint32_t k3 = 0;

  std::uint32_t width() const { return 3 * k1 + 2 * k2 + 2 * k3; }
  Natural d0() const { return pow2(width()); }

  std::uint32_t xa() const { return 0; }
  std::uint32_t x1() const { return k1; }
  std::uint32_t x2() const { return 2 * k1; }
  std::uint32_t y1() const { return 3 * k1; }
  std::uint32_t y2() const { return 3 * k1 + k2; }
  std::uint32_t c1() const { return 3 * k1 + 2 * k2; }
  std::uint32_t c2() const { return 3 * k1 + 2 * k2 + k3; }

  bool operator==(const ZoneLayout&) const = default;
};

ZoneLayout layout_of(const PartitionedFormula& phi);

struct ZoneDecomposition {
  Natural one_s;
  IndexSet xa, x1, x2, y1, y2, c1, c2;

  bool operator==(const ZoneDecomposition&) const = default;
};

ZoneDecomposition decompose(const ZoneLayout& layout, const Natural& n);
Natural recompose(const ZoneLayout& layout, const ZoneDecomposition& zones);

/// Mirror zones agree, XA ⊆ X1, and 1S = 3|X1| + 2|Y1| + 2|C1|.
bool is_consistent(const ZoneLayout& layout, const Natural& e);

/// No low-zone bit is set in two addends; the 1S quotient is unconstrained.
bool carry_free(const ZoneLayout& layout, std::span<const Natural> addends);

/// Every left-associated prefix sum of `addends` is consistent.
bool prefix_consistent(const ZoneLayout& layout,
                       std::span<const Natural> addends);

enum class Variant { NonRep, BoundedGap, Gaps };

std::string to_string(Variant variant);
/// Accepts "nonrep", "bounded", "gaps".
Variant parse_variant(std::string_view text);

/// h(lit) with 1S weight 3 + 2l for X literals and 2 + 2l for Y literals,
/// l being the number of clauses containing the literal.
Natural h_literal(const PartitionedFormula& phi, const ZoneLayout& layout,
                  const Literal& literal);

/// Literals in generator order: x1, ¬x1, x2, ¬x2, ..., y1, ¬y1, ...
std::vector<Literal> all_literals(const PartitionedFormula& phi);

enum class TagKind { X, Y, Clause };

struct DummyTag {
  TagKind kind = TagKind::X;
  std::uint32_t index = 1;

  bool operator==(const DummyTag&) const = default;
};

/// `beta` holds b2 b1 b0 (X tags) or b2 b1 (Y and clause tags) as an integer
/// read most-significant first, so "110" is 6. Zero is rejected.
Natural dummy_integer(const ZoneLayout& layout, DummyTag tag, std::uint32_t beta);

struct Dummy {
  DummyTag tag;
  std::uint32_t beta = 0;
  Natural value;
  /// d(x_k1, 110) and d(x_k1, 111) are raised by d0 in D+.
  bool promoted = false;
};

/// D+ in tag order: X tags (β = 1..7), Y tags (β = 1..3), clause tags
/// (β = 1..3); the two promoted members carry their raised value.
std::vector<Dummy> dummies_plus(const PartitionedFormula& phi,
                                const ZoneLayout& layout);

/// D+ together with the unpromoted d(x_k1, 110) and d(x_k1, 111).
std::vector<Natural> dummies_tilde_plus(const PartitionedFormula& phi,
                                        const ZoneLayout& layout);

struct ReductionBundle {
  Variant variant;
  PartitionedFormula formula;
  ZoneLayout layout;
  std::vector<Natural> h;
  std::vector<Natural> dummies_plus;
  /// d(x_k1, 110), d(x_k1, 111); Gaps only.
  std::vector<Natural> extra_s1;
  Natural d0;
  Natural lambda;
  Natural mu;
  /// 2^(width - 2); Gaps only, zero otherwise.
  Natural f_closed_form;

  /// H ∪ {d0} for NonRep, s0 = H ∪ D+ ∪ {d0} otherwise.
  GeneratorSet t0() const;
  /// s1 = s0 ∪ extra_s1; Gaps only.
  GeneratorSet t1() const;
};

ReductionBundle reduce_to_nonrep(const PartitionedFormula& phi);
ReductionBundle build_bounded(const PartitionedFormula& phi);
ReductionBundle build_gaps_bundle(const PartitionedFormula& phi);
ReductionBundle build_bundle(Variant variant, const PartitionedFormula& phi);

/// λ + Σ_{x_i true} 2^(i-1): the interval member encoding σx.
Natural interval_member(const ReductionBundle& bundle, std::uint64_t x_bits);

/// Most low-zone bits for which F-witness sums are enumerated (2^22 selections).
inline constexpr std::uint32_t kMaxWitnessSumWidth = 24;

struct WitnessSums {
  /// Ascending, duplicates removed.
  std::vector<std::uint64_t> sums;
  std::uint64_t selections = 0;
  bool distinct = false;
};

/// Sums of all selections with exactly one of d(x_k1, 110), d(x_k1, 111), at
/// most one dummy of every other X tag and at most one of every Y and clause
/// tag.
WitnessSums enumerate_f_witness_sums(const PartitionedFormula& phi);

/// Gadget clauses for C = z1 ∨ z2 ∨ z3 over fresh variables x_{base+1}..
/// x_{base+9}.
std::vector<Clause> gadget_clauses(const Clause& clause, std::uint32_t base);

/// Every clause replaced by its seven gadget clauses; fresh variables join
/// the X block after the original ones, clause by clause.
PartitionedFormula one_in_three_gadget(const PartitionedFormula& phi);

/// Tables 4-9 style rendering: one line per row, zones MSB first, 1S decimal.
std::string render_zone_table(
    const ZoneLayout& layout,
    const std::vector<std::pair<std::string, Natural>>& rows);

}  // namespace gapcount
