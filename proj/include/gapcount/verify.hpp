#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapcount/natural.hpp"
#include "gapcount/numeric_semigroup.hpp"
#include "gapcount/reduction.hpp"
#include "gapcount/sat.hpp"

namespace gapcount {

/// Counterexamples kept per failing check.
inline constexpr std::size_t kMaxDetail = 16;

/// One exact comparison. Set-valued conditions use lhs = number of
/// violating elements and rhs = 0.
struct IdentityCheck {
  std::string name;
  Natural lhs;
  Natural rhs;
  /// "=" or "<=".
  std::string relation = "=";
  bool pass = false;
  /// Informational checks are reported but never fail a report.
  bool mandatory = true;
  std::vector<Natural> detail;
  double seconds = 0;
};

struct VerificationReport {
  Variant variant = Variant::NonRep;
  PartitionedFormula formula;
  std::vector<IdentityCheck> checks;

  /// All mandatory checks pass.
  bool passed() const;
  /// Throws std::out_of_range when absent.
  const IdentityCheck& check(const std::string& name) const;
};

struct VerifyOptions {
  std::uint64_t budget_entries = kDefaultTableBudget;
};

VerificationReport verify_nonrep(const ReductionBundle& bundle,
                                 const VerifyOptions& options = {});
VerificationReport verify_bounded(const ReductionBundle& bundle,
                                  const VerifyOptions& options = {});
VerificationReport verify_gaps(const ReductionBundle& bundle,
                               const VerifyOptions& options = {});

/// Builds the bundle for `variant` and runs its verifier.
VerificationReport verify(Variant variant, const PartitionedFormula& phi,
                          const VerifyOptions& options = {});
VerificationReport verify(const ReductionBundle& bundle,
                          const VerifyOptions& options = {});

/// The four conditions of a strong relaxed subtractive reduction over sorted
/// witness sets: W_F ⊆ W_B(t0), W_B(t1) ⊆ W_B(t0), W_B(t1) ∩ W_F = ∅ and
/// |W_A| = |W_B(t0)| - |W_B(t1)| - |W_F|.
std::vector<IdentityCheck> check_relaxed_subtractive(
    const Natural& wa_count, std::span<const std::uint64_t> wb_t0,
    std::span<const std::uint64_t> wb_t1, std::span<const std::uint64_t> wf);

struct SweepConfig {
  std::uint64_t seed = 42;
  std::uint32_t trials = 50;
  std::uint32_t k1_min = 2, k1_max = 3;
  std::uint32_t k2_min = 2, k2_max = 3;
  std::uint32_t k3_min = 2, k3_max = 2;
  std::vector<Variant> variants{Variant::NonRep, Variant::BoundedGap};
  std::uint64_t budget_entries = kDefaultTableBudget;
};

/// Throws PreconditionError on empty or invalid ranges.
void validate(const SweepConfig& config);

struct TrialResult {
  std::uint32_t trial = 0;
  std::uint64_t formula_seed = 0;
  std::uint32_t k1 = 0, k2 = 0, k3 = 0;
  std::optional<PartitionedFormula> formula;
  std::vector<VerificationReport> reports;
  /// Budget refusal or construction failure; recorded, not fatal.
  std::string error;

  bool passed() const;
};

struct SweepSummary {
  std::uint32_t trials = 0;
  std::uint32_t passed = 0;
  std::uint32_t failed = 0;
  std::uint32_t errored = 0;
  /// Mandatory check name -> number of trials where it failed.
  std::map<std::string, std::uint32_t> failures;
};

struct SweepResult {
  SweepConfig config;
  std::vector<TrialResult> trials;
  SweepSummary summary;

  /// Budget errors are reported in the summary but do not fail a sweep.
  bool passed() const { return summary.failed == 0; }
};

/// Trial t draws (k1, k2, k3) and a formula seed from the t-th split of a
/// SplitMix64 stream seeded with config.seed.
SweepResult sweep(const SweepConfig& config);

}  // namespace gapcount
