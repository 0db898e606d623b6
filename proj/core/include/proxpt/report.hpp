#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "proxpt/contraction.hpp"
#include "proxpt/metric.hpp"
#include "proxpt/proximal.hpp"
#include "proxpt/solver.hpp"
#include "proxpt/theta_phi.hpp"

namespace proxpt {

using Json = nlohmann::ordered_json;

/// Significant digits of every real written to a report.
inline constexpr int kReportDigits = 12;

/// Rounds to kReportDigits significant digits; non-finite values become strings.
Json report_number(double value);
std::string format_number(double value);

Json skipped(const std::string& reason);

Json to_json(const MetricAxiomReport& r);
Json to_json(const ProximalProfile& p);
Json to_json(const PPropertyResult& r);
Json to_json(const CompactnessResult& r);
Json to_json(const RangeConditionResult& r);
Json to_json(const FunctionReport& r);
/// At most `max_violations` violations are listed; the count is always complete.
Json to_json(const VerificationReport& r, const FiniteInstance& inst, std::size_t max_violations);
Json to_json(const SolveTrace& t);
Json to_json(const BppResult& r);
Json to_json(const UniquenessReport& r);

}  // namespace proxpt
