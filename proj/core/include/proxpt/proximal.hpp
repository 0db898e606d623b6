#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proxpt/metric.hpp"

namespace proxpt {

/// d(A,B) together with the pairs attaining it and the proximal subsets A0, B0.
/// All id lists are in ascending id order.
struct ProximalProfile {
  double dab = 0.0;
  std::vector<std::pair<PointId, PointId>> attaining_pairs;
  std::vector<PointId> a0;
  std::vector<PointId> b0;
  double tol = kDefaultTol;
};

struct SetDistance {
  double dab = 0.0;
  std::vector<std::pair<PointId, PointId>> attaining_pairs;
};

/// Minimum of d(a,b) over A x B. Attaining pairs are those within `tol` of the
/// minimum (exact equality in exact-int mode, where tol is forced to 0).
SetDistance set_distance(const FiniteInstance& inst, double tol = kDefaultTol);

/// A0 = {a in A : some b in B has |d(a,b) - d(A,B)| <= tol}; B0 symmetric.
ProximalProfile proximal_subsets(const FiniteInstance& inst, double tol = kDefaultTol);

enum class PPropertyMode { strict, weak };
const char* to_string(PPropertyMode mode) noexcept;
PPropertyMode p_property_mode_from_string(const std::string& name);

/// Offending (x1, x2, y1, y2) with d(x1,y1) = d(x2,y2) = d(A,B).
struct PPropertyWitness {
  PointId x1, x2, y1, y2;
  double dx = 0.0;  // d(x1, x2)
  double dy = 0.0;  // d(y1, y2)
};

struct PPropertyResult {
  PPropertyMode mode = PPropertyMode::strict;
  bool pass = true;
  std::size_t tuples_checked = 0;
  /// Lexicographically first violating (x1, x2, y1, y2).
  std::optional<PPropertyWitness> witness;
};

/// Strict: |d(x1,x2) - d(y1,y2)| <= tol; weak: d(x1,x2) <= d(y1,y2) + tol,
/// over every ordered pair of attaining pairs.
PPropertyResult check_p_property(const FiniteInstance& inst, const ProximalProfile& profile,
                                 PPropertyMode mode);
PPropertyResult check_p_property(const FiniteInstance& inst, PPropertyMode mode,
                                 double tol = kDefaultTol);

enum class CompactnessDirection { b_wrt_a, a_wrt_b };
const char* to_string(CompactnessDirection dir) noexcept;

struct CompactnessResult {
  CompactnessDirection direction = CompactnessDirection::b_wrt_a;
  bool pass = true;
  std::string note;
};

/// Every finite set is approximately compact with respect to any set.
CompactnessResult check_approx_compact(const FiniteInstance& inst, CompactnessDirection direction);

struct RangeConditionResult {
  bool pass = true;
  std::optional<PointId> witness;        // first a in A0 with T(a) outside B0
  std::optional<PointId> witness_image;  // T(witness)
};

/// T(A0) contained in B0.
RangeConditionResult check_range_condition(const FiniteInstance& inst,
                                           const ProximalProfile& profile);
RangeConditionResult check_range_condition(const FiniteInstance& inst, double tol = kDefaultTol);

}  // namespace proxpt
