#include "proxpt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "proxpt/parallel.hpp"
#include "proxpt/proximal.hpp"

namespace proxpt {

namespace {

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Effective {
  double tol;
  double eps_conv;
  std::size_t max_iter;
};

Effective effective(const FiniteInstance& inst, const SolveOptions& o) {
  Effective e{o.tol, o.eps_conv, o.max_iter};
  if (inst.exact_int()) e.tol = e.eps_conv = 0.0;
  if (e.max_iter == 0) e.max_iter = 10 * inst.a().size() + 100;
  return e;
}

struct Step {
  std::size_t next;
  double distance;  // d(next, T u)
};

Step nearest_in_a(const FiniteInstance& inst, std::size_t u, double tol) {
  const std::size_t target = inst.image(u);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a : inst.a()) best = std::min(best, inst.distance(a, target));
  for (std::size_t a : inst.a_sorted()) {
    const double da = inst.distance(a, target);
    if (da - best <= tol) return {a, da};
  }
  return {inst.a_sorted().front(), best};
}

}  // namespace

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::converged:
      return "converged";
    case SolveStatus::max_iter:
      return "max_iter";
    case SolveStatus::infeasible_step:
      return "infeasible_step";
  }
  return "?";
}

InfeasibleStep::InfeasibleStep(PointId from, PointId nearest, double distance, double dab, SolveTrace trace)
    : Error("infeasible step from '" + from + "': nearest A-point to T(" + from + ") is '" + nearest +
            "' at distance " + format_g(distance) + " > d(A,B) = " + format_g(dab)),
      from_(std::move(from)),
      nearest_(std::move(nearest)),
      distance_(distance),
      trace_(std::move(trace)) {}

NonConvergence::NonConvergence(SolveTrace trace)
    : Error("no convergence within " + std::to_string(trace.steps()) + " step(s)"), trace_(std::move(trace)) {}

PointId proximal_step(const FiniteInstance& inst, const PointId& u, double tol) {
  if (inst.exact_int()) tol = 0.0;
  const std::size_t ui = inst.index_of(u);
  if (!inst.in_a(ui)) throw UnknownId(u + " (not in A)");
  const double dab = set_distance(inst, tol).dab;
  const Step s = nearest_in_a(inst, ui, tol);
  if (s.distance > dab + tol) throw InfeasibleStep(u, inst.id(s.next), s.distance, dab);
  return inst.id(s.next);
}

namespace {

SolveTrace iterate(const FiniteInstance& inst, const PointId& u0, const Effective& e, double dab) {
  std::size_t u = inst.index_of(u0);
  if (!inst.in_a(u)) throw UnknownId(u0 + " (not in A)");

  SolveTrace trace;
  trace.iterates.push_back(u0);
  for (std::size_t n = 0; n < e.max_iter; ++n) {
    const Step s = nearest_in_a(inst, u, e.tol);
    if (s.distance > dab + e.tol) {
      trace.status = SolveStatus::infeasible_step;
      trace.note = "nearest A-point to T(" + inst.id(u) + ") is '" + inst.id(s.next) + "' at distance " +
                   format_g(s.distance) + " > d(A,B) = " + format_g(dab);
      return trace;
    }
    const double step = inst.distance(u, s.next);
    trace.iterates.push_back(inst.id(s.next));
    trace.step_residuals.push_back(step);
    trace.proximal_residuals.push_back(std::fabs(s.distance - dab));
    u = s.next;
    if (step <= e.eps_conv) {
      trace.status = SolveStatus::converged;
      return trace;
    }
  }
  trace.status = SolveStatus::max_iter;
  return trace;
}

BppResult solve_from(const FiniteInstance& inst, const PointId& u0, const Effective& e,
                     const ProximalProfile& profile) {
  BppResult result;
  if (!std::binary_search(profile.a0.begin(), profile.a0.end(), u0))
    result.warnings.push_back("start '" + u0 + "' is not in A0");

  SolveTrace trace = iterate(inst, u0, e, profile.dab);
  switch (trace.status) {
    case SolveStatus::infeasible_step: {
      const std::size_t last = inst.index_of(trace.iterates.back());
      const Step s = nearest_in_a(inst, last, e.tol);
      throw InfeasibleStep(inst.id(last), inst.id(s.next), s.distance, profile.dab, std::move(trace));
    }
    case SolveStatus::max_iter:
      throw NonConvergence(std::move(trace));
    case SolveStatus::converged:
      break;
  }
  result.point = trace.iterates.back();
  const std::size_t p = inst.index_of(result.point);
  result.bpp_residual = std::fabs(inst.distance(p, inst.image(p)) - profile.dab);
  result.certified = result.bpp_residual <= e.eps_conv + e.tol;
  if (!result.certified)
    result.warnings.push_back("limit '" + result.point + "' misses d(A,B) by " + format_g(result.bpp_residual));
  result.trace = std::move(trace);
  return result;
}

}  // namespace

SolveTrace run_iteration(const FiniteInstance& inst, const PointId& u0, const SolveOptions& options) {
  const Effective e = effective(inst, options);
  return iterate(inst, u0, e, set_distance(inst, e.tol).dab);
}

BppResult solve(const FiniteInstance& inst, const PointId& u0, const SolveOptions& options) {
  const Effective e = effective(inst, options);
  return solve_from(inst, u0, e, proximal_subsets(inst, e.tol));
}

bool verify_bpp(const FiniteInstance& inst, const PointId& u, double tol) {
  if (inst.exact_int()) tol = 0.0;
  const std::size_t ui = inst.index_of(u);
  if (!inst.in_a(ui)) throw UnknownId(u + " (not in A)");
  const double dab = set_distance(inst, tol).dab;
  return std::fabs(inst.distance(ui, inst.image(ui)) - dab) <= tol;
}

UniquenessReport uniqueness_check(const FiniteInstance& inst, const SolveOptions& options, unsigned workers) {
  const Effective e = effective(inst, options);
  const ProximalProfile profile = proximal_subsets(inst, e.tol);

  UniquenessReport report;
  report.starts.resize(profile.a0.size());
  parallel_chunks(profile.a0.size(), resolve_workers(workers),
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      StartOutcome& out = report.starts[i];
                      out.start = profile.a0[i];
                      try {
                        BppResult r = solve_from(inst, out.start, e, profile);
                        out.trace = r.trace;
                        if (r.certified)
                          out.limit = r.point;
                        else
                          out.error = r.warnings.back();
                      } catch (const InfeasibleStep& ex) {
                        out.trace = ex.trace();
                        out.error = ex.what();
                      } catch (const NonConvergence& ex) {
                        out.trace = ex.trace();
                        out.error = ex.what();
                      }
                    }
                  });

  std::set<PointId> limits;
  for (const StartOutcome& s : report.starts)
    if (s.limit) limits.insert(*s.limit);
  for (std::size_t a : inst.a_sorted()) {
    if (std::fabs(inst.distance(a, inst.image(a)) - profile.dab) <= e.tol) {
      report.scan_hits.push_back(inst.id(a));
      limits.insert(inst.id(a));
    }
  }
  report.limits.assign(limits.begin(), limits.end());
  report.unique = report.limits.size() == 1;

  std::set<std::size_t> images;
  for (const PointId& l : report.limits) images.insert(inst.image(inst.index_of(l)));
  report.unique_image = images.size() == 1;
  return report;
}

}  // namespace proxpt
