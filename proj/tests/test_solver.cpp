#include "doctest.h"
#include "fixtures.hpp"
#include "proxpt/builtins.hpp"
#include "proxpt/solver.hpp"

using namespace proxpt;
using Ids = std::vector<PointId>;

TEST_CASE("proximal step") {
  CHECK(proximal_step(triangular(10), "6") == "6");
  CHECK(proximal_step(quartic(3), "a1") == "a2");
  CHECK(proximal_step(strip(), "a1") == "a1");
  try {
    proximal_step(triangular(10), "21");
    FAIL("expected InfeasibleStep");
  } catch (const InfeasibleStep& e) {
    CHECK(e.from() == "21");
    CHECK(e.nearest() == "21");
    CHECK(e.distance() == 6.0);
  }
  CHECK_THROWS_AS(proximal_step(quartic(3), "b1"), UnknownId);
}

TEST_CASE("proximal step breaks ties toward the smallest id") {
  // T(m) = b sits at distance 1 from both l and r.
  std::vector<Point> pts{{"r", {2.0}}, {"l", {0.0}}, {"b", {1.0}}, {"m", {5.0}}, {"c", {6.0}}};
  const FiniteInstance inst(pts, MetricSpec{MetricKind::absolute, {}}, {"r", "l", "m"}, {"b", "c"},
                            {{"r", "b"}, {"l", "b"}, {"m", "b"}});
  CHECK(proximal_step(inst, "m") == "l");
}

TEST_CASE("triangular example solves in one step, exactly") {
  const FiniteInstance t = triangular(10, true);
  const BppResult r = solve(t, "6", SolveOptions{0.0, 0.0, 0});
  CHECK(r.point == "6");
  CHECK(r.bpp_residual == 0.0);
  CHECK(r.certified);
  CHECK(r.trace.status == SolveStatus::converged);
  CHECK(r.trace.steps() == 1);
  CHECK(r.trace.iterates == Ids{"6", "6"});
  CHECK(r.warnings.empty());
}

TEST_CASE("quartic iteration walks down to the origin") {
  const BppResult r = solve(quartic(3), "a1");
  CHECK(r.point == "a0");
  CHECK(r.trace.iterates == Ids{"a1", "a2", "a3", "a4", "a0", "a0"});
  REQUIRE(r.trace.step_residuals.size() == 5);
  const double expect[] = {0.75, 0.1875, 0.046875, 0.015625, 0.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.trace.step_residuals[i] == doctest::Approx(expect[i]).epsilon(1e-15));
  for (double p : r.trace.proximal_residuals) CHECK(p <= 1e-9);
  CHECK(r.bpp_residual <= 1e-12);
  CHECK(r.certified);
}

TEST_CASE("strip is stationary") {
  const BppResult r = solve(strip(), "a0");
  CHECK(r.point == "a0");
  CHECK(r.trace.steps() == 1);
}

TEST_CASE("start outside A0 is warned about") {
  // a1 in the range breaker still lies in A0; use a start with no partner instead.
  std::vector<Point> pts{{"a", {0.0}}, {"far", {10.0}}, {"b", {1.0}}};
  const FiniteInstance inst(pts, MetricSpec{MetricKind::absolute, {}}, {"a", "far"}, {"b"},
                            {{"a", "b"}, {"far", "b"}});
  const BppResult r = solve(inst, "far");
  CHECK(r.point == "a");
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("infeasible and non-convergent runs carry their trace") {
  try {
    solve(triangular(10), "21");
    FAIL("expected InfeasibleStep");
  } catch (const InfeasibleStep& e) {
    CHECK(e.trace().status == SolveStatus::infeasible_step);
    CHECK(e.trace().iterates == Ids{"21"});
  }
  const SolveTrace t = run_iteration(triangular(10), "21");
  CHECK(t.status == SolveStatus::infeasible_step);
  CHECK_FALSE(t.note.empty());

  // two-cycle: T(p) is nearest to q and T(q) nearest to p
  std::vector<Point> pts{{"p", {0.0, 0.0}}, {"q", {0.0, 1.0}}, {"bp", {1.0, 1.0}}, {"bq", {1.0, 0.0}}};
  const FiniteInstance cyc(pts, MetricSpec{MetricKind::euclidean, {}}, {"p", "q"}, {"bp", "bq"},
                           {{"p", "bp"}, {"q", "bq"}});
  try {
    solve(cyc, "p", SolveOptions{kDefaultTol, 1e-10, 7});
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.trace().status == SolveStatus::max_iter);
    CHECK(e.trace().steps() == 7);
  }
}

TEST_CASE("verify_bpp") {
  CHECK(verify_bpp(triangular(10), "6"));
  CHECK_FALSE(verify_bpp(triangular(10), "21"));
  CHECK(verify_bpp(quartic(3), "a0"));
  CHECK_FALSE(verify_bpp(quartic(3), "a1"));
  CHECK_THROWS_AS(verify_bpp(quartic(3), "zz"), UnknownId);
}

TEST_CASE("uniqueness") {
  const UniquenessReport q = uniqueness_check(quartic(3), {}, 2);
  CHECK(q.unique);
  CHECK(q.limits == Ids{"a0"});
  CHECK(q.scan_hits == Ids{"a0"});
  CHECK(q.starts.size() == 5);

  const UniquenessReport s = uniqueness_check(strip());
  CHECK_FALSE(s.unique);
  CHECK_FALSE(s.unique_image);
  CHECK(s.limits == Ids{"a0", "a1"});

  const UniquenessReport t = uniqueness_check(triangular(10, true), SolveOptions{0.0, 0.0, 0});
  CHECK(t.unique);
  CHECK(t.limits == Ids{"6"});
}

TEST_CASE("unique image without a unique point") {
  // two A points both at distance 1 from the shared image
  std::vector<Point> pts{{"u", {0.0, 1.0}}, {"w", {0.0, -1.0}}, {"b", {0.0, 0.0}}};
  const FiniteInstance inst(pts, MetricSpec{MetricKind::euclidean, {}}, {"u", "w"}, {"b"},
                            {{"u", "b"}, {"w", "b"}});
  const UniquenessReport r = uniqueness_check(inst);
  CHECK_FALSE(r.unique);
  CHECK(r.unique_image);
}
