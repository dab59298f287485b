#include <algorithm>

#include "gapcount/errors.hpp"
#include "gapcount/reduction.hpp"

namespace gapcount {

ZoneLayout layout_of(const PartitionedFormula& phi) {
  return {phi.k1(), phi.k2(), phi.k3()};
}

namespace {

IndexSet zone_bits(const Natural& n, std::uint32_t offset, std::uint32_t width) {
  IndexSet out;
  for (std::uint32_t i = 0; i < width; ++i) {
    if (test_bit(n, offset + i)) out.push_back(i + 1);
  }
  return out;
}

void add_zone(Natural& n, std::uint32_t offset, std::uint32_t width,
              const IndexSet& set) {
  for (auto i : set) {
    if (i == 0 || i > width) throw PreconditionError("zone index out of range");
    mpz_setbit(n.get_mpz_t(), offset + i - 1);
  }
}

}  // namespace

ZoneDecomposition decompose(const ZoneLayout& layout, const Natural& n) {
  if (sgn(n) < 0) throw PreconditionError("cannot decompose a negative integer");
  ZoneDecomposition z;
  mpz_fdiv_q_2exp(z.one_s.get_mpz_t(), n.get_mpz_t(), layout.width());
  z.xa = zone_bits(n, layout.xa(), layout.k1);
  z.x1 = zone_bits(n, layout.x1(), layout.k1);
  z.x2 = zone_bits(n, layout.x2(), layout.k1);
  z.y1 = zone_bits(n, layout.y1(), layout.k2);
  z.y2 = zone_bits(n, layout.y2(), layout.k2);
  z.c1 = zone_bits(n, layout.c1(), layout.k3);
  z.c2 = zone_bits(n, layout.c2(), layout.k3);
  return z;
}

Natural recompose(const ZoneLayout& layout, const ZoneDecomposition& z) {
  Natural n;
  mpz_mul_2exp(n.get_mpz_t(), z.one_s.get_mpz_t(), layout.width());
  add_zone(n, layout.xa(), layout.k1, z.xa);
  add_zone(n, layout.x1(), layout.k1, z.x1);
  add_zone(n, layout.x2(), layout.k1, z.x2);
  add_zone(n, layout.y1(), layout.k2, z.y1);
  add_zone(n, layout.y2(), layout.k2, z.y2);
  add_zone(n, layout.c1(), layout.k3, z.c1);
  add_zone(n, layout.c2(), layout.k3, z.c2);
  return n;
}

bool is_consistent(const ZoneLayout& layout, const Natural& e) {
  auto z = decompose(layout, e);
  if (z.c2 != z.c1 || z.y2 != z.y1 || z.x2 != z.x1) return false;
  if (!std::includes(z.x1.begin(), z.x1.end(), z.xa.begin(), z.xa.end())) {
    return false;
  }
  return z.one_s == natural(3 * z.x1.size() + 2 * z.y1.size() + 2 * z.c1.size());
}

bool carry_free(const ZoneLayout& layout, std::span<const Natural> addends) {
  Natural seen = 0;
  Natural low_mask = layout.d0() - 1;
  for (const auto& a : addends) {
    Natural low = a & low_mask;
    if ((seen & low) != 0) return false;
    seen |= low;
  }
  return true;
}

bool prefix_consistent(const ZoneLayout& layout,
                       std::span<const Natural> addends) {
  Natural sum = 0;
  for (const auto& a : addends) {
    sum += a;
    if (!is_consistent(layout, sum)) return false;
  }
  return true;
}

}  // namespace gapcount
