#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <stdexcept>

#include "gapcount/errors.hpp"
#include "gapcount/verify.hpp"

namespace gapcount {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) {
    return c.pass || !c.mandatory;
  });
}

const IdentityCheck& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t word(const Natural& n, const char* what) {
  auto v = to_u64(n);
  if (!v) throw ResourceError(std::string(what) + " does not fit a machine word");
  return *v;
}

IdentityCheck equality(std::string name, Natural lhs, Natural rhs,
                       bool mandatory = true) {
  IdentityCheck c;
  c.name = std::move(name);
  c.pass = lhs == rhs;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.mandatory = mandatory;
  return c;
}

/// Set condition: passes iff no violations were found.
IdentityCheck violations(std::string name, std::uint64_t count,
                         const std::vector<std::uint64_t>& examples,
                         bool mandatory = true) {
  IdentityCheck c = equality(std::move(name), natural(count), 0, mandatory);
  if (!c.pass) {
    for (std::size_t i = 0; i < examples.size() && i < kMaxDetail; ++i) {
      c.detail.push_back(natural(examples[i]));
    }
  }
  return c;
}

/// Counts n in [lo, hi] where select(a_word, b_word) has bit n set; keeps
/// the first `keep` such n. Both tables must reach hi.
template <class Select>
std::uint64_t scan(const RepresentabilityTable& a, const RepresentabilityTable& b,
                   std::uint64_t lo, std::uint64_t hi, Select select,
                   std::vector<std::uint64_t>& found, std::size_t keep) {
  if (lo > hi) return 0;
  auto wa = a.words();
  auto wb = b.words();
  std::uint64_t total = 0;
  for (std::size_t k = lo >> 6; k <= (hi >> 6); ++k) {
    std::uint64_t bits = select(wa[k], wb[k]);
    if (k == (lo >> 6)) bits &= ~std::uint64_t{0} << (lo & 63);
    if (k == (hi >> 6) && (hi & 63) != 63) bits &= (std::uint64_t{2} << (hi & 63)) - 1;
    total += static_cast<std::uint64_t>(std::popcount(bits));
    while (bits != 0 && found.size() < keep) {
      found.push_back(k * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return total;
}

GeneratorSet nonrep_set(const ReductionBundle& bundle) {
  std::vector<Natural> values = bundle.h;
  values.push_back(bundle.d0);
  return GeneratorSet(std::move(values));
}

/// Depth-first search for a subset of H whose low zones tile the low zones
/// of n exactly; the 1S remainder is then a multiple of d0.
class CarryFreeSearch {
 public:
  CarryFreeSearch(const ReductionBundle& bundle) {
    low_mask_ = word(bundle.d0, "d0") - 1;
    for (const auto& h : bundle.h) items_.push_back(word(h, "generator"));
  }

  bool representable(std::uint64_t n) const {
    return search(0, n & low_mask_, 0, 0, n);
  }

 private:
  bool search(std::size_t i, std::uint64_t target, std::uint64_t used,
              std::uint64_t sum, std::uint64_t n) const {
    if (used == target) return sum <= n;
    if (i == items_.size() || sum > n) return false;
    std::uint64_t low = items_[i] & low_mask_;
    if ((low & ~target) == 0 && (low & used) == 0 &&
        search(i + 1, target, used | low, sum + items_[i], n)) {
      return true;
    }
    return search(i + 1, target, used, sum, n);
  }

  std::uint64_t low_mask_ = 0;
  std::vector<std::uint64_t> items_;
};

VerificationReport empty_report(const ReductionBundle& bundle) {
  return VerificationReport{bundle.variant, bundle.formula, {}};
}

template <class Fn>
void timed(VerificationReport& report, Fn fn) {
  auto start = Clock::now();
  IdentityCheck c = fn();
  c.seconds = since(start);
  report.checks.push_back(std::move(c));
}

}  // namespace

VerificationReport verify_nonrep(const ReductionBundle& bundle,
                                 const VerifyOptions& options) {
  VerificationReport report = empty_report(bundle);
  const auto& phi = bundle.formula;
  const std::uint64_t lambda = word(bundle.lambda, "lambda");
  const std::uint64_t mu = word(bundle.mu, "mu");

  auto start = Clock::now();
  auto good = good_x_assignments(phi);
  const auto pi1 = static_cast<std::uint64_t>(std::count(good.begin(), good.end(), false));
  RepresentabilityTable table(nonrep_set(bundle), mu, options.budget_entries);
  auto gaps = table.gaps(lambda, mu);
  IdentityCheck count = equality("pi1_eq_interval_gaps", natural(pi1),
                                 natural(gaps.size()));
  count.seconds = since(start);
  report.checks.push_back(std::move(count));

  timed(report, [&] {
    std::vector<std::uint64_t> bad;
    for (std::uint64_t sx = 0; sx < good.size(); ++sx) {
      std::uint64_t member = lambda + sx;
      if (table.representable(member) != static_cast<bool>(good[sx])) bad.push_back(member);
    }
    return violations("bijection_bad_sigma_x_to_gaps", bad.size(), bad);
  });

  timed(report, [&] {
    CarryFreeSearch search(bundle);
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = lambda; n <= mu; ++n) {
      if (search.representable(n) != table.representable(n)) bad.push_back(n);
    }
    return violations("carry_free_representation_iff_representable", bad.size(), bad);
  });
  return report;
}

VerificationReport verify_bounded(const ReductionBundle& bundle,
                                  const VerifyOptions& options) {
  if (bundle.variant == Variant::NonRep) {
    throw PreconditionError("bounded verification needs s0");
  }
  VerificationReport report = empty_report(bundle);
  const std::uint64_t lambda = word(bundle.lambda, "lambda");
  const std::uint64_t mu = word(bundle.mu, "mu");
  const std::uint64_t top = word(bundle.mu + bundle.d0, "mu + d0");

  auto start = Clock::now();
  const GeneratorSet s0 = bundle.t0();
  RepresentabilityTable t0(s0, top, options.budget_entries);
  const std::uint64_t pi1 = count_pi1_one_in_three(bundle.formula);
  // With d0 in s0, d0 consecutive members above mu cover everything beyond.
  IdentityCheck a = equality("pi1_eq_gaps_from_lambda", natural(pi1),
                             natural(t0.count_gaps(lambda, top)));
  a.seconds = since(start);
  report.checks.push_back(std::move(a));

  timed(report, [&] {
    auto gaps = t0.gaps(mu + 1, top);
    return violations("tail_mu_plus_1_to_mu_plus_d0_representable", gaps.size(), gaps);
  });

  RepresentabilityTable th(nonrep_set(bundle), top, options.budget_entries);
  timed(report, [&] {
    std::vector<std::uint64_t> bad;
    auto n = scan(t0, th, lambda, mu,
                  [](std::uint64_t x, std::uint64_t y) { return x ^ y; }, bad, kMaxDetail);
    return violations("interval_gaps_match_nonrep", n, bad);
  });

  timed(report, [&] {
    std::vector<std::uint64_t> bad;
    // A gap of s0 that H ∪ {d0} represents breaks N(s0) ⊆ N(H ∪ {d0}).
    auto n = scan(t0, th, 1, top,
                  [](std::uint64_t x, std::uint64_t y) { return ~x & y; }, bad, kMaxDetail);
    return violations("monotone_gaps_s0_within_h", n, bad);
  });

  timed(report, [&] { return equality("gcd_s0", gcd_of_set(s0), 1); });
  return report;
}

VerificationReport verify_gaps(const ReductionBundle& bundle,
                               const VerifyOptions& options) {
  if (bundle.variant != Variant::Gaps) {
    throw PreconditionError("gaps verification needs s0 and s1");
  }
  VerificationReport report = empty_report(bundle);
  const std::uint64_t lambda = word(bundle.lambda, "lambda");

  auto start = Clock::now();
  const GeneratorSet s0 = bundle.t0();
  const GeneratorSet s1 = bundle.t1();
  for (const auto* s : {&s0, &s1}) {
    if (!is_coprime(*s)) {
      report.checks.push_back(equality(s == &s0 ? "gcd_s0" : "gcd_s1", gcd_of_set(*s), 1));
      return report;
    }
  }
  RepresentabilityTable t0 = stabilized_table(s0, options.budget_entries);
  RepresentabilityTable t1 = stabilized_table(s1, options.budget_entries);
  const std::uint64_t top = std::max(t0.bound(), t1.bound());
  if (t0.bound() < top) t0 = RepresentabilityTable(s0, top, options.budget_entries);
  if (t1.bound() < top) t1 = RepresentabilityTable(s1, top, options.budget_entries);
  const double table_seconds = since(start);

  const std::uint64_t n0 = t0.count_gaps(1, top);
  const std::uint64_t n1 = t1.count_gaps(1, top);

  timed(report, [&] {
    std::vector<std::uint64_t> bad;
    auto n = scan(t0, t1, 1, top,
                  [](std::uint64_t x, std::uint64_t y) { return x & ~y; }, bad, kMaxDetail);
    return violations("gaps_s1_within_s0", n, bad);
  });

  timed(report, [&] {
    auto gaps = t1.gaps(lambda, top);
    return violations("no_s1_gaps_from_lambda", gaps.size(), gaps);
  });

  std::vector<std::uint64_t> f_emp;
  scan(t0, t1, 1, lambda - 1,
       [](std::uint64_t x, std::uint64_t y) { return ~x & y; }, f_emp, SIZE_MAX);

  start = Clock::now();
  const std::uint64_t pi1 = count_pi1_one_in_three(bundle.formula);
  IdentityCheck identity = equality(
      "pi1_eq_n_s0_minus_n_s1_minus_f", natural(pi1),
      natural(n0) - natural(n1) - natural(f_emp.size()));
  identity.seconds = since(start) + table_seconds;
  report.checks.push_back(std::move(identity));

  report.checks.push_back(equality("f_emp_eq_closed_form", natural(f_emp.size()),
                                   bundle.f_closed_form, false));

  timed(report, [&] {
    std::vector<std::uint64_t> bad;
    for (auto f : f_emp) {
      if (t0.representable(f)) bad.push_back(f);
    }
    return violations("f_emp_within_gaps_s0", bad.size(), bad);
  });
  timed(report, [&] {
    std::vector<std::uint64_t> bad;
    for (auto f : f_emp) {
      if (!t1.representable(f)) bad.push_back(f);
    }
    return violations("f_emp_disjoint_gaps_s1", bad.size(), bad);
  });

  timed(report, [&] {
    IdentityCheck c = equality("stabilization_s0_le_mu_d0_min",
                               natural(t0.last_gap().value_or(0) + 1),
                               bundle.mu + bundle.d0 + s0.min());
    c.relation = "<=";
    c.pass = c.lhs <= c.rhs;
    return c;
  });

  if (bundle.layout.width() <= kMaxWitnessSumWidth) {
    timed(report, [&] {
      auto sums = enumerate_f_witness_sums(bundle.formula);
      std::vector<std::uint64_t> below;
      for (auto s : sums.sums) {
        if (s >= 1 && s < lambda) below.push_back(s);
      }
      std::vector<std::uint64_t> diff;
      std::set_symmetric_difference(below.begin(), below.end(), f_emp.begin(),
                                    f_emp.end(), std::back_inserter(diff));
      IdentityCheck c = equality("f_witness_sums_below_lambda_eq_f_emp",
                                 natural(below.size()), natural(f_emp.size()), false);
      c.pass = diff.empty();
      for (std::size_t i = 0; i < diff.size() && i < kMaxDetail && !c.pass; ++i) {
        c.detail.push_back(natural(diff[i]));
      }
      return c;
    });
    timed(report, [&] {
      auto sums = enumerate_f_witness_sums(bundle.formula);
      return equality("f_witness_sums_distinct", natural(sums.sums.size()),
                      natural(sums.selections), false);
    });
  }

  report.checks.push_back(equality("gcd_s0", gcd_of_set(s0), 1));
  report.checks.push_back(equality("gcd_s1", gcd_of_set(s1), 1));
  return report;
}

VerificationReport verify(const ReductionBundle& bundle,
                          const VerifyOptions& options) {
  switch (bundle.variant) {
    case Variant::NonRep: return verify_nonrep(bundle, options);
    case Variant::BoundedGap: return verify_bounded(bundle, options);
    case Variant::Gaps: return verify_gaps(bundle, options);
  }
  throw PreconditionError("unknown variant");
}

VerificationReport verify(Variant variant, const PartitionedFormula& phi,
                          const VerifyOptions& options) {
  return verify(build_bundle(variant, phi), options);
}

std::vector<IdentityCheck> check_relaxed_subtractive(
    const Natural& wa_count, std::span<const std::uint64_t> wb_t0,
    std::span<const std::uint64_t> wb_t1, std::span<const std::uint64_t> wf) {
  auto missing = [](std::span<const std::uint64_t> sub,
                    std::span<const std::uint64_t> super) {
    std::vector<std::uint64_t> out;
    std::set_difference(sub.begin(), sub.end(), super.begin(), super.end(),
                        std::back_inserter(out));
    return out;
  };
  std::vector<IdentityCheck> out;
  auto f_out = missing(wf, wb_t0);
  out.push_back(violations("w_f_within_w_t0", f_out.size(), f_out));
  auto t1_out = missing(wb_t1, wb_t0);
  out.push_back(violations("w_t1_within_w_t0", t1_out.size(), t1_out));
  std::vector<std::uint64_t> both;
  std::set_intersection(wb_t1.begin(), wb_t1.end(), wf.begin(), wf.end(),
                        std::back_inserter(both));
  out.push_back(violations("w_t1_disjoint_w_f", both.size(), both));
  out.push_back(equality("w_a_eq_t0_minus_t1_minus_f", wa_count,
                         natural(wb_t0.size()) - natural(wb_t1.size()) -
                             natural(wf.size())));
  return out;
}

}  // namespace gapcount
