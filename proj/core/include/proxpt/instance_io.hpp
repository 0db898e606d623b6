#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "proxpt/contraction.hpp"
#include "proxpt/metric.hpp"
#include "proxpt/theta_phi.hpp"

namespace proxpt {

inline constexpr int kFormatVersion = 1;

/// Optional run settings an instance file may carry next to the instance.
struct InstanceConfig {
  std::optional<ThetaSpec> theta;
  std::optional<PhiSpec> phi;
  std::optional<ContractionParams> params;
  std::optional<double> tol;
  std::optional<double> eps_conv;
  std::optional<std::size_t> max_iter;
};

struct InstanceFile {
  FiniteInstance instance;
  InstanceConfig config;
};

/// Parses a JSON instance document.
///   ParseError      malformed JSON
///   SchemaError     missing / extra / mistyped field (path in the message)
///   IntegrityError  dangling id, T not total or not into B, metric axioms violated
InstanceFile parse_instance(const std::string& text, bool exact_int = false);
InstanceFile load_instance_file(const std::string& path, bool exact_int = false);
FiniteInstance load_instance(const std::string& path, bool exact_int = false);

/// Pretty-printed JSON; ids, points and T keep their declaration order.
std::string serialize_instance(const FiniteInstance& inst, const InstanceConfig& config = {});
void save_instance(const std::string& path, const FiniteInstance& inst, const InstanceConfig& config = {});

/// Copy of `inst` with exact-integer distance evaluation switched on or off.
FiniteInstance with_exact_int(const FiniteInstance& inst, bool exact_int);

}  // namespace proxpt
