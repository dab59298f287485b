#include "gapcount/sat.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gapcount/errors.hpp"
#include "gapcount/splitmix.hpp"

namespace gapcount {

std::string to_string(const Literal& literal) {
  std::string out = literal.positive ? "" : "-";
  out += literal.variable.block == Block::X ? 'x' : 'y';
  out += std::to_string(literal.variable.index);
  return out;
}

Clause::Clause(Literal a, Literal b, Literal c) : literals_{a, b, c} {
  for (const auto& l : literals_) {
    if (l.variable.index == 0) {
      throw PreconditionError("variable indices start at 1");
    }
  }
  if (a.variable == b.variable || a.variable == c.variable ||
      b.variable == c.variable) {
    throw PreconditionError("clause " + to_string(a) + " " + to_string(b) +
                            " " + to_string(c) +
                            " repeats a variable");
  }
}

bool Clause::contains(const Literal& literal) const {
  return std::find(literals_.begin(), literals_.end(), literal) !=
         literals_.end();
}

PartitionedFormula::PartitionedFormula(std::vector<Clause> clauses)
    : clauses_(std::move(clauses)) {
  if (clauses_.size() < 2) {
    throw PreconditionError("a formula needs at least two clauses");
  }
  std::vector<bool> seen_x, seen_y;
  for (const auto& c : clauses_) {
    for (const auto& l : c.literals()) {
      auto& seen = l.variable.block == Block::X ? seen_x : seen_y;
      if (seen.size() < l.variable.index) seen.resize(l.variable.index, false);
      seen[l.variable.index - 1] = true;
    }
  }
  for (std::size_t i = 0; i < seen_x.size(); ++i) {
    if (!seen_x[i]) {
      throw PreconditionError("x" + std::to_string(i + 1) + " never occurs");
    }
  }
  for (std::size_t i = 0; i < seen_y.size(); ++i) {
    if (!seen_y[i]) {
      throw PreconditionError("y" + std::to_string(i + 1) + " never occurs");
    }
  }
  k1_ = static_cast<std::uint32_t>(seen_x.size());
  k2_ = static_cast<std::uint32_t>(seen_y.size());
  if (k1_ < 2) throw PreconditionError("a formula needs at least two X variables");
}

std::string bit_string(std::uint64_t bits, std::uint32_t width) {
  std::string out(width, '0');
  for (std::uint32_t i = 0; i < width; ++i) {
    if ((bits >> i) & 1U) out[i] = '1';
  }
  return out;
}

namespace {

std::uint64_t parse_bits(std::string_view text) {
  if (text.size() > 64) throw ParseError("bit string longer than 64");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw ParseError("not a bit string: '" + std::string(text) + "'");
    }
  }
  return bits;
}

std::uint64_t low_mask(std::uint32_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

Assignment::Assignment(std::uint32_t k1, std::uint32_t k2, std::uint64_t x_bits,
                       std::uint64_t y_bits)
    : k1_(k1), k2_(k2), x_bits_(x_bits), y_bits_(y_bits) {
  if (k1 > 64 || k2 > 64 || (x_bits & ~low_mask(k1)) != 0 ||
      (y_bits & ~low_mask(k2)) != 0) {
    throw PreconditionError("assignment bits exceed the block widths");
  }
}

Assignment Assignment::parse(std::string_view x_bits, std::string_view y_bits) {
  return Assignment(static_cast<std::uint32_t>(x_bits.size()),
                    static_cast<std::uint32_t>(y_bits.size()),
                    parse_bits(x_bits), parse_bits(y_bits));
}

bool Assignment::value(const Variable& v) const {
  const bool is_x = v.block == Block::X;
  if (v.index == 0 || v.index > (is_x ? k1_ : k2_)) {
    throw PreconditionError("assignment does not cover variable");
  }
  return (((is_x ? x_bits_ : y_bits_) >> (v.index - 1)) & 1U) != 0;
}

std::string Assignment::x_string() const { return bit_string(x_bits_, k1_); }
std::string Assignment::y_string() const { return bit_string(y_bits_, k2_); }

int true_literal_count(const Clause& clause, const Assignment& sigma) {
  int count = 0;
  for (const auto& l : clause.literals()) count += sigma.value(l) ? 1 : 0;
  return count;
}

bool exactly_one_everywhere(const PartitionedFormula& phi,
                            const Assignment& sigma) {
  return std::all_of(phi.clauses().begin(), phi.clauses().end(),
                     [&](const Clause& c) { return true_literal_count(c, sigma) == 1; });
}

bool phi_member(std::uint32_t k, const PartitionedFormula& phi,
                const Assignment& sigma) {
  bool all_satisfied =
      std::all_of(phi.clauses().begin(), phi.clauses().end(),
                  [&](const Clause& c) { return true_literal_count(c, sigma) != 0; });
  return k % 2 == 0 ? all_satisfied : !all_satisfied;
}

bool phi13_member(std::uint32_t k, const PartitionedFormula& phi,
                  const Assignment& sigma) {
  bool exact = exactly_one_everywhere(phi, sigma);
  return k % 2 == 0 ? exact : !exact;
}

namespace {

// Bit-sliced enumeration: assignment index = (σx << k2) | σy, so y_i sits at
// bit i-1 and x_i at bit k2+i-1. One 64-bit block evaluates 64 consecutive
// indices; the six lowest index bits vary inside the block.
constexpr std::array<std::uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

struct SlicedLiteral {
  std::uint32_t position;
  bool positive;
};

class SlicedFormula {
 public:
  explicit SlicedFormula(const PartitionedFormula& phi)
      : k2_(phi.k2()), variables_(phi.k1() + phi.k2()) {
    if (variables_ > kMaxEnumeratedVariables) {
      throw ResourceError("exhaustive enumeration over " +
                          std::to_string(variables_) +
                          " variables exceeds the 2^30 budget");
    }
    for (const auto& c : phi.clauses()) {
      std::array<SlicedLiteral, 3> sliced{};
      for (std::size_t t = 0; t < 3; ++t) {
        const auto& l = c.literals()[t];
        std::uint32_t pos = l.variable.block == Block::Y
                                ? l.variable.index - 1
                                : k2_ + l.variable.index - 1;
        sliced[t] = {pos, l.positive};
      }
      clauses_.push_back(sliced);
    }
  }

  std::uint32_t variables() const { return variables_; }
  std::uint64_t blocks() const {
    return variables_ <= 6 ? 1 : std::uint64_t{1} << (variables_ - 6);
  }
  std::uint64_t valid_mask() const {
    return variables_ >= 6 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << (1U << variables_)) - 1;
  }

  /// Lanes where every clause has exactly one true literal.
  std::uint64_t exact(std::uint64_t block) const {
    std::uint64_t acc = valid_mask();
    for (const auto& c : clauses_) {
      std::uint64_t a = lane(c[0], block), b = lane(c[1], block),
                    d = lane(c[2], block);
      acc &= (a ^ b ^ d) & ~(a & b & d);
      if (acc == 0) break;
    }
    return acc;
  }

  /// Lanes where every clause has a true literal.
  std::uint64_t satisfied(std::uint64_t block) const {
    std::uint64_t acc = valid_mask();
    for (const auto& c : clauses_) {
      acc &= lane(c[0], block) | lane(c[1], block) | lane(c[2], block);
      if (acc == 0) break;
    }
    return acc;
  }

 private:
  static std::uint64_t lane(const SlicedLiteral& l, std::uint64_t block) {
    std::uint64_t m = l.position < 6
                          ? kLanePattern[l.position]
                          : (((block >> (l.position - 6)) & 1U) ? ~std::uint64_t{0} : 0);
    return l.positive ? m : ~m;
  }

  std::uint32_t k2_;
  std::uint32_t variables_;
  std::vector<std::array<SlicedLiteral, 3>> clauses_;
};

}  // namespace

std::uint64_t count_models(const PartitionedFormula& phi) {
  SlicedFormula sliced(phi);
  std::uint64_t total = 0;
  for (std::uint64_t b = 0; b < sliced.blocks(); ++b) {
    total += std::popcount(sliced.satisfied(b));
  }
  return total;
}

std::uint64_t count_one_in_three(const PartitionedFormula& phi) {
  SlicedFormula sliced(phi);
  std::uint64_t total = 0;
  for (std::uint64_t b = 0; b < sliced.blocks(); ++b) {
    total += std::popcount(sliced.exact(b));
  }
  return total;
}

std::vector<bool> good_x_assignments(const PartitionedFormula& phi) {
  SlicedFormula sliced(phi);
  const std::uint32_t k2 = phi.k2();
  std::vector<bool> good(std::size_t{1} << phi.k1(), false);
  for (std::uint64_t b = 0; b < sliced.blocks(); ++b) {
    std::uint64_t lanes = sliced.exact(b);
    if (lanes == 0) continue;
    if (k2 >= 6) {
      good[b >> (k2 - 6)] = true;
      continue;
    }
    // Several σx share this block, each owning 2^k2 consecutive lanes.
    const std::uint32_t width = 1U << k2;
    const std::uint64_t segment = low_mask(width);
    for (std::uint32_t s = 0; s * width < 64; ++s) {
      if ((lanes >> (s * width)) & segment) {
        good[((b << 6) + s * width) >> k2] = true;
      }
    }
  }
  return good;
}

std::uint64_t count_pi1_one_in_three(const PartitionedFormula& phi) {
  auto good = good_x_assignments(phi);
  return static_cast<std::uint64_t>(std::count(good.begin(), good.end(), false));
}

WitnessMatrix::WitnessMatrix(const PartitionedFormula& phi)
    : k1_(phi.k1()), k2_(phi.k2()), k3_(phi.k3()) {
  if (k1_ + k2_ > kMaxWitnessMatrixVariables) {
    throw ResourceError("witness matrix over " + std::to_string(k1_ + k2_) +
                        " variables exceeds the 2^16 cell budget");
  }
  cells_.resize(std::size_t{1} << (k1_ + k2_));
  for (std::uint64_t sx = 0; sx < (std::uint64_t{1} << k1_); ++sx) {
    for (std::uint64_t sy = 0; sy < (std::uint64_t{1} << k2_); ++sy) {
      Assignment sigma(k1_, k2_, sx, sy);
      auto& cell = cells_[(sx << k2_) | sy];
      for (std::uint32_t j = 1; j <= k3_; ++j) {
        if (true_literal_count(phi.clause(j), sigma) == 1) cell.push_back(j);
      }
    }
  }
}

std::vector<std::uint64_t> display_order(std::uint32_t width) {
  std::vector<std::uint64_t> order(std::size_t{1} << width);
  for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [width](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return bit_string(a, width) > bit_string(b, width);
  });
  return order;
}

std::string WitnessMatrix::render() const {
  auto rows = display_order(k1_);
  auto cols = display_order(k2_);
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"sx\\sy"};
  for (auto c : cols) header.push_back(bit_string(c, k2_));
  grid.push_back(header);
  for (auto r : rows) {
    std::vector<std::string> line{bit_string(r, k1_)};
    for (auto c : cols) {
      const auto& indices = cell(r, c);
      std::string text;
      for (auto j : indices) text += (text.empty() ? "" : ",") + std::to_string(j);
      line.push_back(text.empty() ? "---" : text);
    }
    grid.push_back(line);
  }
  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      widths[i] = std::max(widths[i], line[i].size());
    }
  }
  std::string out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(widths[i] - line[i].size() + 2, ' ');
    }
    out += text + "\n";
  }
  return out;
}

PartitionedFormula random_formula(std::uint64_t seed, std::uint32_t k1,
                                  std::uint32_t k2, std::uint32_t k3) {
  if (k1 < 2 || k3 < 2) {
    throw PreconditionError("random formulas need k1 >= 2 and k3 >= 2");
  }
  const std::uint32_t n = k1 + k2;
  if (n < 3) {
    throw PreconditionError("a clause needs three distinct variables");
  }
  if (3 * k3 < n) {
    throw PreconditionError("3*k3 clause slots cannot cover " +
                            std::to_string(n) + " variables");
  }
  SplitMix64 rng(seed);
  std::vector<Variable> vars;
  for (std::uint32_t i = 1; i <= k1; ++i) vars.push_back({Block::X, i});
  for (std::uint32_t i = 1; i <= k2; ++i) vars.push_back({Block::Y, i});

  // Deal a shuffled copy of every variable into the first n slots so each
  // occurs; fill the remaining slots with fresh draws distinct within their
  // clause.
  std::vector<Variable> deck = vars;
  for (std::size_t i = deck.size(); i > 1; --i) {
    std::swap(deck[i - 1], deck[rng.below(i)]);
  }
  std::vector<std::array<Variable, 3>> slots(k3);
  std::size_t dealt = 0;
  for (std::uint32_t j = 0; j < k3; ++j) {
    for (std::size_t t = 0; t < 3; ++t) {
      if (dealt < deck.size()) {
        slots[j][t] = deck[dealt++];
        continue;
      }
      for (;;) {
        Variable v = vars[rng.below(vars.size())];
        bool clash = false;
        for (std::size_t u = 0; u < t; ++u) clash = clash || slots[j][u] == v;
        if (!clash) {
          slots[j][t] = v;
          break;
        }
      }
    }
  }
  // Deal order fills whole clauses first; shuffle clauses so the covering
  // prefix is not always the leading clauses.
  for (std::size_t i = slots.size(); i > 1; --i) {
    std::swap(slots[i - 1], slots[rng.below(i)]);
  }
  std::vector<Clause> clauses;
  for (const auto& s : slots) {
    clauses.emplace_back(Literal{s[0], rng.coin()}, Literal{s[1], rng.coin()},
                         Literal{s[2], rng.coin()});
  }
  return PartitionedFormula(std::move(clauses));
}

}  // namespace gapcount
