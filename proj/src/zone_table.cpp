#include <algorithm>

#include "gapcount/reduction.hpp"

namespace gapcount {

namespace {

std::string zone_string(const Natural& n, std::uint32_t offset, std::uint32_t width) {
  std::string out;
  for (std::uint32_t i = width; i-- > 0;) out += test_bit(n, offset + i) ? '1' : '0';
  return out.empty() ? "-" : out;
}

}  // namespace

std::string render_zone_table(
    const ZoneLayout& layout,
    const std::vector<std::pair<std::string, Natural>>& rows) {
  std::vector<std::vector<std::string>> grid{
      {"row", "1S", "C2", "C1", "Y2", "Y1", "X2", "X1", "XA"}};
  for (const auto& [label, n] : rows) {
    Natural one_s;
    mpz_fdiv_q_2exp(one_s.get_mpz_t(), n.get_mpz_t(), layout.width());
    grid.push_back({label, to_decimal(one_s),
                    zone_string(n, layout.c2(), layout.k3),
                    zone_string(n, layout.c1(), layout.k3),
                    zone_string(n, layout.y2(), layout.k2),
                    zone_string(n, layout.y1(), layout.k2),
                    zone_string(n, layout.x2(), layout.k1),
                    zone_string(n, layout.x1(), layout.k1),
                    zone_string(n, layout.xa(), layout.k1)});
  }
  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      widths[i] = std::max(widths[i], line[i].size());
    }
  }
  std::string out;
  for (const auto& line : grid) {
    std::string text = line[0] + std::string(widths[0] - line[0].size(), ' ');
    for (std::size_t i = 1; i < line.size(); ++i) {
      text += "  " + std::string(widths[i] - line[i].size(), ' ') + line[i];
    }
    out += text + "\n";
  }
  return out;
}

}  // namespace gapcount
