#include "gapcount/errors.hpp"
#include "gapcount/splitmix.hpp"
#include "gapcount/verify.hpp"

namespace gapcount {

void validate(const SweepConfig& c) {
  if (c.k1_min < 2 || c.k1_min > c.k1_max) {
    throw PreconditionError("k1 range must satisfy 2 <= min <= max");
  }
  if (c.k2_min > c.k2_max) throw PreconditionError("k2 range is empty");
  if (c.k3_min < 2 || c.k3_min > c.k3_max) {
    throw PreconditionError("k3 range must satisfy 2 <= min <= max");
  }
  if (c.variants.empty()) throw PreconditionError("no variant selected");
}

bool TrialResult::passed() const {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

namespace {

std::uint32_t draw(SplitMix64& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(rng.below(std::uint64_t{hi} - lo + 1));
}

}  // namespace

SweepResult sweep(const SweepConfig& config) {
  validate(config);
  SweepResult result{config, {}, {}};
  SplitMix64 root(config.seed);
  for (std::uint32_t t = 0; t < config.trials; ++t) {
    SplitMix64 rng = root.split();
    TrialResult trial;
    trial.trial = t;
    trial.k1 = draw(rng, config.k1_min, config.k1_max);
    trial.k2 = draw(rng, config.k2_min, config.k2_max);
    trial.k3 = draw(rng, config.k3_min, config.k3_max);
    trial.formula_seed = rng.next();
    try {
      trial.formula = random_formula(trial.formula_seed, trial.k1, trial.k2, trial.k3);
      VerifyOptions options{config.budget_entries};
      for (auto variant : config.variants) {
        trial.reports.push_back(verify(variant, *trial.formula, options));
      }
    } catch (const ResourceError& e) {
      trial.error = e.what();
    } catch (const PreconditionError& e) {
      trial.error = e.what();
    }

    auto& s = result.summary;
    ++s.trials;
    if (!trial.error.empty()) {
      ++s.errored;
    } else if (trial.passed()) {
      ++s.passed;
    } else {
      ++s.failed;
    }
    for (const auto& r : trial.reports) {
      for (const auto& c : r.checks) {
        if (c.mandatory && !c.pass) ++s.failures[to_string(r.variant) + "/" + c.name];
      }
    }
    result.trials.push_back(std::move(trial));
  }
  return result;
}

}  // namespace gapcount
