#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "proxpt/metric.hpp"
#include "proxpt/theta_phi.hpp"

namespace proxpt {

/// Coefficients (a, b, c, h) of the generalized proximal contraction.
/// Invariants: all >= 0, a + b + c + 2h <= 1 (+ tol), c + h < 1.
class ContractionParams {
 public:
  ContractionParams(double a, double b, double c, double h, double tol = kDefaultTol);
  /// "a,b,c,h"
  static ContractionParams parse(const std::string& text);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double h() const noexcept { return h_; }

  friend bool operator==(const ContractionParams&, const ContractionParams&) = default;

 private:
  double a_, b_, c_, h_;
};

enum class ContractionKind { first, second };
const char* to_string(ContractionKind kind) noexcept;

/// Which quadruples enter the check.
///  - positive_distance: the theta argument on the left must exceed tol.
///  - literal: drop u1 == v1 (first kind) / Tu1 == Tv1 (second kind) only;
///    theta is extended by its limit theta(0+) = 1 where its argument vanishes.
enum class AdmissibilityFilter { positive_distance, literal };
const char* to_string(AdmissibilityFilter filter) noexcept;
AdmissibilityFilter admissibility_filter_from_string(const std::string& name);

/// (u, v) in A x A with |d(u, T v) - d(A,B)| <= tol, as point indices.
struct ProximalPair {
  std::size_t u;
  std::size_t v;
  friend bool operator==(const ProximalPair&, const ProximalPair&) = default;
};

/// Sorted by (id(u), id(v)).
std::vector<ProximalPair> proximal_pairs(const FiniteInstance& inst, double tol = kDefaultTol);
std::vector<std::pair<PointId, PointId>> enumerate_proximal_pairs(const FiniteInstance& inst,
                                                                  double tol = kDefaultTol);

/// One failing quadruple, as point indices into the instance.
struct Violation {
  std::uint32_t u1, u2, v1, v2;
  double lhs;
  double rhs;        // meaningless unless rhs_defined
  bool rhs_defined;  // false when the bracketed argument is <= tol

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class VerificationStatus { holds, violated, vacuous };
const char* to_string(VerificationStatus status) noexcept;

struct VerificationReport {
  ContractionKind kind = ContractionKind::first;
  VerificationStatus status = VerificationStatus::vacuous;
  AdmissibilityFilter filter = AdmissibilityFilter::positive_distance;
  std::size_t proximal_pair_count = 0;
  std::size_t total_quadruples = 0;
  std::size_t admissible_quadruple_count = 0;
  std::size_t filtered_count = 0;
  /// Sorted by (id(u1), id(u2), id(v1), id(v2)).
  std::vector<Violation> violations;
};

struct VerifyOptions {
  double tol = kDefaultTol;
  AdmissibilityFilter filter = AdmissibilityFilter::positive_distance;
  /// 0: resolve from PROXPT_WORKERS / hardware concurrency.
  unsigned workers = 0;
};

/// theta(d(u1,u2)) <= phi(theta(a d(v1,v2) + b d(u1,v1) + c d(u2,v2) + h (d(v1,u2) + d(v2,u1))))
/// over every ordered pair of proximal pairs (u1,v1), (u2,v2).
VerificationReport verify_first_kind(const FiniteInstance& inst, const ThetaSpec& theta,
                                     const PhiSpec& phi, const ContractionParams& params,
                                     const VerifyOptions& options = {});

/// Same inequality with every distance taken between T-images.
VerificationReport verify_second_kind(const FiniteInstance& inst, const ThetaSpec& theta,
                                      const PhiSpec& phi, const ContractionParams& params,
                                      const VerifyOptions& options = {});

VerificationReport verify_contraction(ContractionKind kind, const FiniteInstance& inst,
                                      const ThetaSpec& theta, const PhiSpec& phi,
                                      const ContractionParams& params,
                                      const VerifyOptions& options = {});

}  // namespace proxpt
