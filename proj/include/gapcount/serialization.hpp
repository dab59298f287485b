#pragma once

#include <string>
#include <string_view>

#include "gapcount/reduction.hpp"
#include "gapcount/verify.hpp"

namespace gapcount {

inline constexpr std::string_view kInstanceSchema = "gapcount-instance/1";
inline constexpr std::string_view kReportSchema = "gapcount-report/1";

/// JSON document; every integer is a decimal string.
std::string instance_document(const ReductionBundle& bundle);

/// Rebuilds the bundle from the embedded formula and rejects documents whose
/// generators or endpoints disagree with the rebuilt ones.
ReductionBundle parse_instance_document(std::string_view text);

/// Reports carry no timings, so identical runs serialize identically.
std::string report_document(const VerificationReport& report);
std::string sweep_document(const SweepResult& result);

/// One line per check: trial, check, lhs, rhs, pass (tab separated).
std::string tabular_header();
std::string report_tabular(const VerificationReport& report, std::uint32_t trial = 0);
std::string sweep_tabular(const SweepResult& result);

/// Human-readable rendering.
std::string report_text(const VerificationReport& report);
std::string sweep_text(const SweepResult& result);

}  // namespace gapcount
