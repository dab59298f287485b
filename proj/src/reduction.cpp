#include <algorithm>

#include "gapcount/errors.hpp"
#include "gapcount/reduction.hpp"

namespace gapcount {

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::NonRep: return "nonrep";
    case Variant::BoundedGap: return "bounded";
    case Variant::Gaps: return "gaps";
  }
  return "unknown";
}

Variant parse_variant(std::string_view text) {
  if (text == "nonrep") return Variant::NonRep;
  if (text == "bounded") return Variant::BoundedGap;
  if (text == "gaps") return Variant::Gaps;
  throw ParseError("unknown variant '" + std::string(text) + "'");
}

Natural h_literal(const PartitionedFormula& phi, const ZoneLayout& layout,
                  const Literal& literal) {
  const std::uint32_t i = literal.variable.index;
  const bool is_x = literal.variable.block == Block::X;
  if (i == 0 || i > (is_x ? phi.k1() : phi.k2())) {
    throw PreconditionError("literal " + to_string(literal) +
                            " does not occur in the formula");
  }
  Natural n = 0;
  std::uint64_t l = 0;
  for (std::uint32_t j = 1; j <= phi.k3(); ++j) {
    if (!phi.clause(j).contains(literal)) continue;
    ++l;
    n += pow2(layout.c2() + j - 1) + pow2(layout.c1() + j - 1);
  }
  if (is_x) {
    n += natural(3 + 2 * l) * layout.d0();
    n += pow2(layout.x2() + i - 1) + pow2(layout.x1() + i - 1);
    if (literal.positive) n += pow2(layout.xa() + i - 1);
  } else {
    n += natural(2 + 2 * l) * layout.d0();
    n += pow2(layout.y2() + i - 1) + pow2(layout.y1() + i - 1);
  }
  return n;
}

std::vector<Literal> all_literals(const PartitionedFormula& phi) {
  std::vector<Literal> out;
  for (std::uint32_t i = 1; i <= phi.k1(); ++i) {
    out.push_back(x(i, true));
    out.push_back(x(i, false));
  }
  for (std::uint32_t i = 1; i <= phi.k2(); ++i) {
    out.push_back(y(i, true));
    out.push_back(y(i, false));
  }
  return out;
}

Natural dummy_integer(const ZoneLayout& layout, DummyTag tag, std::uint32_t beta) {
  const std::uint32_t i = tag.index;
  auto require = [&](std::uint32_t count, std::uint32_t max_beta) {
    if (i == 0 || i > count) throw PreconditionError("dummy tag index out of range");
    if (beta == 0 || beta > max_beta) {
      throw PreconditionError("dummy selector must be nonzero and fit its width");
    }
  };
  Natural n;
  switch (tag.kind) {
    case TagKind::X:
      require(layout.k1, 7);
      n = 3 * layout.d0();
      if (beta & 4U) n += pow2(layout.x2() + i - 1);
      if (beta & 2U) n += pow2(layout.x1() + i % layout.k1);
      if (beta & 1U) n += pow2(layout.xa() + i - 1);
      break;
    case TagKind::Y:
      require(layout.k2, 3);
      n = 2 * layout.d0();
      if (beta & 2U) n += pow2(layout.y2() + i - 1);
      if (beta & 1U) n += pow2(layout.y1() + i % layout.k2);
      break;
    case TagKind::Clause:
      require(layout.k3, 3);
      n = 2 * layout.d0();
      if (beta & 2U) n += pow2(layout.c2() + i - 1);
      if (beta & 1U) n += pow2(layout.c1() + i % layout.k3);
      break;
  }
  return n;
}

std::vector<Dummy> dummies_plus(const PartitionedFormula& phi,
                                const ZoneLayout& layout) {
  std::vector<Dummy> out;
  for (std::uint32_t i = 1; i <= phi.k1(); ++i) {
    for (std::uint32_t beta = 1; beta <= 7; ++beta) {
      DummyTag tag{TagKind::X, i};
      Dummy d{tag, beta, dummy_integer(layout, tag, beta), false};
      if (i == phi.k1() && beta >= 6) {
        d.value += layout.d0();
        d.promoted = true;
      }
      out.push_back(std::move(d));
    }
  }
  for (std::uint32_t i = 1; i <= phi.k2(); ++i) {
    for (std::uint32_t beta = 1; beta <= 3; ++beta) {
      DummyTag tag{TagKind::Y, i};
      out.push_back({tag, beta, dummy_integer(layout, tag, beta), false});
    }
  }
  for (std::uint32_t i = 1; i <= phi.k3(); ++i) {
    for (std::uint32_t beta = 1; beta <= 3; ++beta) {
      DummyTag tag{TagKind::Clause, i};
      out.push_back({tag, beta, dummy_integer(layout, tag, beta), false});
    }
  }
  return out;
}

namespace {

std::vector<Natural> special_pair(const PartitionedFormula& phi,
                                  const ZoneLayout& layout) {
  DummyTag tag{TagKind::X, phi.k1()};
  return {dummy_integer(layout, tag, 6), dummy_integer(layout, tag, 7)};
}

GeneratorSet as_set(std::vector<Natural> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return GeneratorSet(std::move(values));
}

}  // namespace

std::vector<Natural> dummies_tilde_plus(const PartitionedFormula& phi,
                                        const ZoneLayout& layout) {
  std::vector<Natural> out;
  for (auto& d : dummies_plus(phi, layout)) out.push_back(std::move(d.value));
  for (auto& v : special_pair(phi, layout)) out.push_back(std::move(v));
  return out;
}

GeneratorSet ReductionBundle::t0() const {
  std::vector<Natural> values = h;
  values.insert(values.end(), dummies_plus.begin(), dummies_plus.end());
  values.push_back(d0);
  return as_set(std::move(values));
}

GeneratorSet ReductionBundle::t1() const {
  if (variant != Variant::Gaps) {
    throw PreconditionError("s1 exists only for the gaps reduction");
  }
  std::vector<Natural> values = t0().elements();
  values.insert(values.end(), extra_s1.begin(), extra_s1.end());
  return as_set(std::move(values));
}

ReductionBundle reduce_to_nonrep(const PartitionedFormula& phi) {
  ZoneLayout layout = layout_of(phi);
  ReductionBundle b{Variant::NonRep, phi, layout, {}, {}, {}, layout.d0(), 0, 0, 0};
  for (const auto& lit : all_literals(phi)) b.h.push_back(h_literal(phi, layout, lit));
  const std::uint32_t w = layout.width();
  b.lambda = natural(w) * b.d0 + (pow2(w) - pow2(layout.k1));
  b.mu = natural(w + 1) * b.d0 - 1;
  return b;
}

ReductionBundle build_bounded(const PartitionedFormula& phi) {
  ReductionBundle b = reduce_to_nonrep(phi);
  b.variant = Variant::BoundedGap;
  for (auto& d : dummies_plus(phi, b.layout)) b.dummies_plus.push_back(std::move(d.value));
  return b;
}

ReductionBundle build_gaps_bundle(const PartitionedFormula& phi) {
  ReductionBundle b = build_bounded(phi);
  b.variant = Variant::Gaps;
  b.extra_s1 = special_pair(phi, b.layout);
  b.f_closed_form = pow2(b.layout.width() - 2);
  return b;
}

ReductionBundle build_bundle(Variant variant, const PartitionedFormula& phi) {
  switch (variant) {
    case Variant::NonRep: return reduce_to_nonrep(phi);
    case Variant::BoundedGap: return build_bounded(phi);
    case Variant::Gaps: return build_gaps_bundle(phi);
  }
  throw PreconditionError("unknown variant");
}

Natural interval_member(const ReductionBundle& bundle, std::uint64_t x_bits) {
  return bundle.lambda + natural(x_bits);
}

WitnessSums enumerate_f_witness_sums(const PartitionedFormula& phi) {
  ZoneLayout layout = layout_of(phi);
  if (layout.width() > kMaxWitnessSumWidth) {
    throw ResourceError("F-witness enumeration over 2^" +
                        std::to_string(layout.width() - 2) +
                        " selections exceeds the 2^22 budget");
  }
  auto small = [](const Natural& n) { return *to_u64(n); };

  std::vector<std::uint64_t> sums;
  for (const auto& v : special_pair(phi, layout)) sums.push_back(small(v));

  // Every other tag contributes nothing or exactly one of its dummies.
  auto extend = [&](DummyTag tag, std::uint32_t max_beta) {
    std::vector<std::uint64_t> next;
    next.reserve(sums.size() * (max_beta + 1));
    std::vector<std::uint64_t> options{0};
    for (std::uint32_t beta = 1; beta <= max_beta; ++beta) {
      options.push_back(small(dummy_integer(layout, tag, beta)));
    }
    for (auto s : sums) {
      for (auto o : options) next.push_back(s + o);
    }
    sums.swap(next);
  };
  for (std::uint32_t i = 1; i < phi.k1(); ++i) extend({TagKind::X, i}, 7);
  for (std::uint32_t i = 1; i <= phi.k2(); ++i) extend({TagKind::Y, i}, 3);
  for (std::uint32_t i = 1; i <= phi.k3(); ++i) extend({TagKind::Clause, i}, 3);

  WitnessSums out;
  out.selections = sums.size();
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  out.distinct = sums.size() == out.selections;
  out.sums = std::move(sums);
  return out;
}

}  // namespace gapcount
