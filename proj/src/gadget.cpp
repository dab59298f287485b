#include "gapcount/reduction.hpp"

namespace gapcount {

std::vector<Clause> gadget_clauses(const Clause& clause, std::uint32_t base) {
  const auto& z = clause.literals();
  auto c = [base](std::uint32_t t) { return x(base + t); };
  return {
      Clause(z[0], c(1), c(2)),
      Clause(z[1], c(2), c(3)),
      Clause(z[2], c(5), c(6)),
      Clause(z[2], c(6), c(7)),
      Clause(c(1), c(3), c(4)),
      Clause(c(5), c(7), c(8)),
      Clause(c(2), c(6), c(9)),
  };
}

PartitionedFormula one_in_three_gadget(const PartitionedFormula& phi) {
  std::vector<Clause> out;
  std::uint32_t base = phi.k1();
  for (const auto& clause : phi.clauses()) {
    auto block = gadget_clauses(clause, base);
    out.insert(out.end(), block.begin(), block.end());
    base += 9;
  }
  return PartitionedFormula(std::move(out));
}

}  // namespace gapcount
