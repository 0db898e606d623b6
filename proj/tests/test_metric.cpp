#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "proxpt/builtins.hpp"
#include "proxpt/errors.hpp"
#include "proxpt/metric.hpp"

using namespace proxpt;

TEST_CASE("eval_metric on the absolute line") {
  const FiniteInstance t = triangular(10);
  CHECK(eval_metric(t, "6", "3") == 3.0);
  CHECK(eval_metric(t, "3", "6") == 3.0);
  CHECK(eval_metric(t, "21", "21") == 0.0);
}

TEST_CASE("eval_metric euclidean") {
  std::vector<Point> pts{{"o", {0.0, 0.0}}, {"p", {0.0, 1.0}}, {"q", {1.0, 0.0}}};
  const FiniteInstance inst(pts, MetricSpec{MetricKind::euclidean, {}}, {"o", "p"}, {"q"},
                            {{"o", "q"}, {"p", "q"}});
  CHECK(eval_metric(inst, "o", "o") == 0.0);
  CHECK(eval_metric(inst, "p", "q") == doctest::Approx(1.4142135623730951).epsilon(1e-15));
}

TEST_CASE("eval_metric unknown id") {
  const FiniteInstance s = strip();
  CHECK_THROWS_AS(eval_metric(s, "a0", "zz"), UnknownId);
  CHECK_THROWS_AS(s.index_of("nope"), UnknownId);
}

TEST_CASE("explicit matrix lookup") {
  const FiniteInstance p = fixtures::p_property_breaker();
  CHECK(eval_metric(p, "x1", "x2") == 2.0);
  CHECK(eval_metric(p, "y2", "y1") == 1.0);
}

TEST_CASE("analytic metrics skip the scan but pass it when forced") {
  const FiniteInstance q = quartic(3);
  const MetricAxiomReport r = validate_metric_axioms(q);
  CHECK(r.analytic);
  CHECK(r.pass());
  const MetricAxiomReport forced = validate_metric_axioms(q, kDefaultTol, true);
  CHECK(forced.pass());
  CHECK(forced.axioms.size() == 3);
}

TEST_CASE("triangle violation reports the first triple") {
  const MetricAxiomReport r = validate_metric_axioms(fixtures::triangle_breaker());
  REQUIRE_FALSE(r.pass());
  const AxiomResult* bad = r.first_failure();
  REQUIRE(bad != nullptr);
  CHECK(bad->axiom == "triangle");
  CHECK(bad->witness == std::vector<PointId>{"a", "b", "c"});
  CHECK(bad->excess == doctest::Approx(1.0));
}

TEST_CASE("asymmetric matrix fails symmetry") {
  const MetricAxiomReport r = validate_metric_axioms(fixtures::asymmetric());
  REQUIRE_FALSE(r.pass());
  CHECK(r.first_failure()->axiom == "symmetry");
  CHECK(r.first_failure()->witness == std::vector<PointId>{"a", "b"});
}

TEST_CASE("zero distance between distinct points fails identity") {
  std::vector<Point> pts{{"a", {0}}, {"b", {0}}};
  const FiniteInstance inst(pts, MetricSpec{MetricKind::explicit_matrix, {{0, 0}, {0, 0}}}, {"a"}, {"b"},
                            {{"a", "b"}});
  const MetricAxiomReport r = validate_metric_axioms(inst);
  REQUIRE_FALSE(r.pass());
  CHECK(r.first_failure()->axiom == "identity");
}

TEST_CASE("construction integrity") {
  std::vector<Point> pts{{"a", {0.0}}, {"b", {1.0}}};
  const MetricSpec abs{MetricKind::absolute, {}};
  CHECK_THROWS_AS(FiniteInstance(pts, abs, {"a"}, {"b"}, {}), IntegrityError);
  CHECK_THROWS_AS(FiniteInstance(pts, abs, {"a"}, {"b"}, {{"a", "a"}}), IntegrityError);
  CHECK_THROWS_AS(FiniteInstance(pts, abs, {"a"}, {"zz"}, {{"a", "b"}}), IntegrityError);
  CHECK_THROWS_AS(FiniteInstance(pts, abs, {}, {"b"}, {}), IntegrityError);
  std::vector<Point> dup{{"a", {0.0}}, {"a", {1.0}}};
  CHECK_THROWS_AS(FiniteInstance(dup, abs, {"a"}, {"a"}, {{"a", "a"}}), IntegrityError);
  std::vector<Point> mixed{{"a", {0.0}}, {"b", {1.0, 2.0}}};
  CHECK_THROWS_AS(FiniteInstance(mixed, MetricSpec{MetricKind::euclidean, {}}, {"a"}, {"b"}, {{"a", "b"}}),
                  IntegrityError);
  CHECK_THROWS_AS(FiniteInstance(pts, MetricSpec{MetricKind::explicit_matrix, {{0, 1}}}, {"a"}, {"b"},
                                 {{"a", "b"}}),
                  IntegrityError);
}

TEST_CASE("exact-int mode") {
  const FiniteInstance t = triangular(10, true);
  CHECK(t.exact_int());
  CHECK(t.integer_value(t.index_of("465")) == 465);
  CHECK(t.distance(t.index_of("6"), t.index_of("3")) == 3.0);
  std::vector<Point> pts{{"a", {0.5}}, {"b", {1.0}}};
  CHECK_THROWS_AS(FiniteInstance(pts, MetricSpec{MetricKind::absolute, {}}, {"a"}, {"b"}, {{"a", "b"}}, true),
                  IntegrityError);
}

TEST_CASE("id rank follows string order") {
  const FiniteInstance t = triangular(2);
  // ids 1,3,6,10,15,21 sort as strings: "1" < "10" < "15" < "21" < "3" < "6"
  CHECK(t.rank(t.index_of("1")) == 0);
  CHECK(t.rank(t.index_of("10")) == 1);
  CHECK(t.rank(t.index_of("6")) == 5);
}
