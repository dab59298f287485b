#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gapcount {

/// Most assignments an exhaustive counter will enumerate (2^30).
inline constexpr std::uint32_t kMaxEnumeratedVariables = 30;
/// Most cells a witness matrix will materialize (2^16).
inline constexpr std::uint32_t kMaxWitnessMatrixVariables = 16;

/// X variables are counted; Y variables are universally quantified.
enum class Block : std::uint8_t { X, Y };

struct Variable {
  Block block = Block::X;
  std::uint32_t index = 1;  // 1-based within its block

  auto operator<=>(const Variable&) const = default;
};

struct Literal {
  Variable variable;
  bool positive = true;

  Literal operator~() const { return {variable, !positive}; }
  bool operator==(const Literal&) const = default;
};

inline Literal x(std::uint32_t i, bool positive = true) {
  return {{Block::X, i}, positive};
}
inline Literal y(std::uint32_t i, bool positive = true) {
  return {{Block::Y, i}, positive};
}

/// "x3", "-y1".
std::string to_string(const Literal& literal);

/// Three literals over pairwise distinct variables.
class Clause {
 public:
  Clause(Literal a, Literal b, Literal c);

  const std::array<Literal, 3>& literals() const { return literals_; }
  bool contains(const Literal& literal) const;

  bool operator==(const Clause&) const = default;

 private:
  std::array<Literal, 3> literals_;
};

/// 3-CNF over an X block (x1..xk1) and a Y block (y1..yk2).
///
/// Block sizes are the largest index used, and every index below it must
/// occur. At least two X variables and two clauses are required; an empty Y
/// block is allowed.
class PartitionedFormula {
 public:
  explicit PartitionedFormula(std::vector<Clause> clauses);

  std::uint32_t k1() const { return k1_; }
  std::uint32_t k2() const { return k2_; }
  std::uint32_t k3() const { return static_cast<std::uint32_t>(clauses_.size()); }

  const std::vector<Clause>& clauses() const { return clauses_; }
  /// 1-based, matching C_1..C_k3.
  const Clause& clause(std::uint32_t j) const { return clauses_.at(j - 1); }

  bool operator==(const PartitionedFormula&) const = default;

 private:
  std::vector<Clause> clauses_;
  std::uint32_t k1_ = 0;
  std::uint32_t k2_ = 0;
};

/// Truth values for both blocks. Bit i-1 of `x_bits` is the value of x_i;
/// rendered strings read b_1 b_2 ... left to right.
class Assignment {
 public:
  Assignment(std::uint32_t k1, std::uint32_t k2, std::uint64_t x_bits,
             std::uint64_t y_bits);
  /// From strings such as ("1100", "010").
  static Assignment parse(std::string_view x_bits, std::string_view y_bits);

  std::uint32_t k1() const { return k1_; }
  std::uint32_t k2() const { return k2_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t y_bits() const { return y_bits_; }

  bool value(const Variable& v) const;
  bool value(const Literal& l) const { return value(l.variable) == l.positive; }

  std::string x_string() const;
  std::string y_string() const;

 private:
  std::uint32_t k1_;
  std::uint32_t k2_;
  std::uint64_t x_bits_;
  std::uint64_t y_bits_;
};

/// "b_1 b_2 ... b_k" rendering of the low `width` bits.
std::string bit_string(std::uint64_t bits, std::uint32_t width);

int true_literal_count(const Clause& clause, const Assignment& sigma);
bool exactly_one_everywhere(const PartitionedFormula& phi,
                            const Assignment& sigma);

/// Membership in the satisfaction family: for even k every clause has a true
/// literal, for odd k some clause has none.
bool phi_member(std::uint32_t k, const PartitionedFormula& phi,
                const Assignment& sigma);
/// Membership in the one-in-three family: for even k every clause has exactly
/// one true literal, for odd k some clause does not.
bool phi13_member(std::uint32_t k, const PartitionedFormula& phi,
                  const Assignment& sigma);

/// Satisfying assignments over all 2^(k1+k2) assignments.
std::uint64_t count_models(const PartitionedFormula& phi);
/// Assignments with exactly one true literal in every clause.
std::uint64_t count_one_in_three(const PartitionedFormula& phi);

/// good[σx] is true iff some σy makes every clause exactly-one true.
std::vector<bool> good_x_assignments(const PartitionedFormula& phi);

/// Number of σx for which no σy makes every clause exactly-one true.
std::uint64_t count_pi1_one_in_three(const PartitionedFormula& phi);

/// For every (σx, σy), the clause indices with exactly one true literal.
class WitnessMatrix {
 public:
  explicit WitnessMatrix(const PartitionedFormula& phi);

  std::uint32_t k1() const { return k1_; }
  std::uint32_t k2() const { return k2_; }
  const std::vector<std::uint32_t>& cell(std::uint64_t x_bits,
                                         std::uint64_t y_bits) const {
    return cells_.at((x_bits << k2_) | y_bits);
  }

  /// Rows and columns ordered by number of ones, then by descending bit
  /// string ("100" before "010"); empty cells print as "---".
  std::string render() const;

 private:
  std::uint32_t k1_;
  std::uint32_t k2_;
  std::uint32_t k3_;
  std::vector<std::vector<std::uint32_t>> cells_;
};

/// Bit patterns of width k in the display order used by WitnessMatrix.
std::vector<std::uint64_t> display_order(std::uint32_t width);

/// Deterministic random formula: every clause has three distinct variables,
/// every variable occurs, polarities are fair coins.
PartitionedFormula random_formula(std::uint64_t seed, std::uint32_t k1,
                                  std::uint32_t k2, std::uint32_t k3);

/// One clause per line, literals like "-x1 x2 y1".
std::string to_text(const PartitionedFormula& phi);
/// Inverse of to_text; '#' starts a comment, blank lines are skipped.
PartitionedFormula parse_formula(std::string_view text);
PartitionedFormula read_formula_file(const std::string& path);

}  // namespace gapcount
