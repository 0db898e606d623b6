#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "proxpt/errors.hpp"
#include "proxpt/metric.hpp"

namespace proxpt {

enum class SolveStatus { converged, max_iter, infeasible_step };
const char* to_string(SolveStatus status) noexcept;

/// History of the proximal iteration d(u_{n+1}, T u_n) = d(A,B).
/// step_residuals[n] = d(u_n, u_{n+1}); proximal_residuals[n] = |d(u_{n+1}, T u_n) - d(A,B)|.
struct SolveTrace {
  std::vector<PointId> iterates;
  std::vector<double> step_residuals;
  std::vector<double> proximal_residuals;
  SolveStatus status = SolveStatus::max_iter;
  /// Set on infeasible_step.
  std::string note;

  std::size_t steps() const noexcept { return step_residuals.size(); }
};

struct BppResult {
  PointId point;
  double bpp_residual = 0.0;  // |d(u*, T u*) - d(A,B)|
  bool certified = false;     // bpp_residual <= eps_conv + tol
  SolveTrace trace;
  std::vector<std::string> warnings;
};

struct SolveOptions {
  double tol = kDefaultTol;
  double eps_conv = 1e-10;
  /// 0: 10 |A| + 100.
  std::size_t max_iter = 0;
};

/// No point of A attains d(A,B) against T(u).
class InfeasibleStep : public Error {
 public:
  InfeasibleStep(PointId from, PointId nearest, double distance, double dab, SolveTrace trace = {});
  const PointId& from() const noexcept { return from_; }
  const PointId& nearest() const noexcept { return nearest_; }
  double distance() const noexcept { return distance_; }
  const SolveTrace& trace() const noexcept { return trace_; }

 private:
  PointId from_, nearest_;
  double distance_;
  SolveTrace trace_;
};

class NonConvergence : public Error {
 public:
  explicit NonConvergence(SolveTrace trace);
  const SolveTrace& trace() const noexcept { return trace_; }

 private:
  SolveTrace trace_;
};

/// argmin over a in A of d(a, T u), ties (within tol) to the smallest id.
/// InfeasibleStep if that minimum exceeds d(A,B) + tol.
PointId proximal_step(const FiniteInstance& inst, const PointId& u, double tol = kDefaultTol);

/// Runs the iteration without throwing; the trace status says how it ended.
SolveTrace run_iteration(const FiniteInstance& inst, const PointId& u0, const SolveOptions& options = {});

/// Iterates proximal_step from u0 until d(u_n, u_{n+1}) <= eps_conv.
/// Throws InfeasibleStep or NonConvergence, both carrying the partial trace.
BppResult solve(const FiniteInstance& inst, const PointId& u0, const SolveOptions& options = {});

/// |d(u, T u) - d(A,B)| <= tol.
bool verify_bpp(const FiniteInstance& inst, const PointId& u, double tol = kDefaultTol);

struct StartOutcome {
  PointId start;
  SolveTrace trace;
  std::optional<PointId> limit;  // set when the start converged and certified
  std::string error;             // set otherwise
};

struct UniquenessReport {
  bool unique = false;        // solver limits plus scan hits form one point
  bool unique_image = false;  // their T-images form one point
  std::vector<PointId> limits;       // union, sorted
  std::vector<PointId> scan_hits;    // every a in A with verify_bpp(a)
  std::vector<StartOutcome> starts;  // one per u0 in A0, in id order
};

/// Solves from every u0 in A0 and scans all of A with verify_bpp.
UniquenessReport uniqueness_check(const FiniteInstance& inst, const SolveOptions& options = {},
                                  unsigned workers = 0);

}  // namespace proxpt
