#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "proxpt/builtins.hpp"
#include "proxpt/errors.hpp"
#include "proxpt/instance_io.hpp"

using namespace proxpt;
using Ids = std::vector<PointId>;

namespace {

Ids ids_of(const FiniteInstance& inst, std::span<const std::size_t> idx) {
  Ids out;
  for (std::size_t i : idx) out.push_back(inst.id(i));
  return out;
}

void check_same(const FiniteInstance& x, const FiniteInstance& y) {
  CHECK(x.points() == y.points());
  CHECK(x.metric() == y.metric());
  CHECK(ids_of(x, x.a()) == ids_of(y, y.a()));
  CHECK(ids_of(x, x.b()) == ids_of(y, y.b()));
  CHECK(x.mapping() == y.mapping());
}

const char* kMinimal = R"({
  "format_version": 1,
  "points": [{"id": "a", "value": 0}, {"id": "b", "value": 2}],
  "metric": {"kind": "absolute"},
  "A": ["a"],
  "B": ["b"],
  "T": {"a": "b"}
})";

template <typename E>
std::string error_path(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const E& e) {
    if constexpr (std::is_same_v<E, SchemaError>) return e.path();
    return e.what();
  }
  return "<no error>";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("builtin triangular instance") {
  const FiniteInstance t1 = triangular(1);
  CHECK(ids_of(t1, t1.a()) == Ids{"6"});
  CHECK(ids_of(t1, t1.b()) == Ids{"3"});
  CHECK(t1.size() == 3);

  const FiniteInstance t = triangular(40);
  for (std::size_t n = 1; n + 1 <= 120; ++n) {
    const double step = t.points()[n].coords[0] - t.points()[n - 1].coords[0];
    CHECK(step == double(n + 1));
  }
  CHECK_THROWS_AS(triangular(0), ParamError);
}

TEST_CASE("builtin quartic and strip") {
  const FiniteInstance q = quartic(3);
  CHECK(q.size() == 10);
  std::vector<double> ys;
  for (std::size_t i : q.a()) ys.push_back(q.points()[i].coords[1]);
  CHECK(ys == std::vector<double>{0.0, 1.0, 0.25, 0.0625, 0.015625});
  CHECK(q.id(q.image(q.index_of("a1"))) == "b2");
  CHECK(q.id(q.image(q.index_of("a4"))) == "b0");
  CHECK_THROWS_AS(quartic(0), ParamError);
  CHECK(strip().size() == 4);
  CHECK_THROWS_AS(generate_builtin("cube", 1), ParamError);
  CHECK_THROWS_AS(generate_builtin("quartic", 3, true), ParamError);
}

TEST_CASE("serialize and parse round-trip") {
  for (const FiniteInstance& inst :
       {triangular(5), quartic(4), strip(), fixtures::p_property_breaker(), fixtures::quartic_range_breaker()}) {
    const std::string text = serialize_instance(inst);
    const FiniteInstance back = parse_instance(text).instance;
    check_same(inst, back);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("config round-trip") {
  InstanceConfig cfg;
  cfg.theta = ThetaSpec::exp_sqrt();
  cfg.phi = PhiSpec::pow(0.25);
  cfg.params = ContractionParams(0.5, 0.25, 0, 0.125);
  cfg.tol = 1e-7;
  cfg.eps_conv = 1e-8;
  cfg.max_iter = 50;
  const InstanceFile f = parse_instance(serialize_instance(strip(), cfg));
  CHECK(f.config.theta == cfg.theta);
  CHECK(f.config.phi == cfg.phi);
  CHECK(f.config.params == cfg.params);
  CHECK(f.config.tol == cfg.tol);
  CHECK(f.config.eps_conv == cfg.eps_conv);
  CHECK(f.config.max_iter == cfg.max_iter);
}

TEST_CASE("file round-trip and the triangular N=2 document") {
  const std::string path = "tri2.json";
  save_instance(path, triangular(2));
  const FiniteInstance t = load_instance(path);
  CHECK(ids_of(t, t.a()) == Ids{"6", "21"});
  CHECK(ids_of(t, t.b()) == Ids{"3", "15"});
  CHECK(t.mapping() == std::vector<std::pair<PointId, PointId>>{{"6", "3"}, {"21", "15"}});
  Ids all;
  for (const Point& p : t.points()) all.push_back(p.id);
  CHECK(all == Ids{"1", "3", "6", "10", "15", "21"});
  CHECK(load_instance(path, true).exact_int());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_instance("does-not-exist.json"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_NOTHROW(parse_instance(kMinimal));
  CHECK_THROWS_AS(parse_instance("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
}

TEST_CASE("schema errors name the field") {
  const std::string base = kMinimal;
  CHECK(error_path<SchemaError>(replace(base, R"("format_version": 1,)", "")) == "format_version");
  CHECK(error_path<SchemaError>(replace(base, R"("format_version": 1)", R"("format_version": 2)")) ==
        "format_version");
  CHECK(error_path<SchemaError>(replace(base, R"("A": ["a"],)", R"("A": ["a"], "extra": 1,)")) == "extra");
  CHECK(error_path<SchemaError>(replace(base, R"("value": 2)", R"("value": "x")")) == "points[1].value");
  CHECK(error_path<SchemaError>(replace(base, R"("kind": "absolute")", R"("kind": "taxicab")")) == "metric.kind");
  CHECK(error_path<SchemaError>(replace(base, R"("T": {"a": "b"})", R"("T": ["a"])")) == "T");
}

TEST_CASE("explicit matrix missing a row") {
  const std::string doc = R"({
    "format_version": 1,
    "points": [{"id": "a", "value": 0}, {"id": "b", "value": 0}],
    "metric": {"kind": "explicit", "matrix": [[0, 1]]},
    "A": ["a"], "B": ["b"], "T": {"a": "b"}
  })";
  CHECK(error_path<SchemaError>(doc) == "metric.matrix");
}

TEST_CASE("integrity errors") {
  const std::string base = kMinimal;
  const std::string into_a = error_path<IntegrityError>(replace(base, R"("T": {"a": "b"})", R"("T": {"a": "a"})"));
  CHECK(into_a.find("T(a)") != std::string::npos);
  CHECK(error_path<IntegrityError>(replace(base, R"("T": {"a": "b"})", R"("T": {})")).find("not defined") !=
        std::string::npos);
  CHECK(error_path<IntegrityError>(replace(base, R"("B": ["b"])", R"("B": ["q"])")).find("'q'") !=
        std::string::npos);
}

TEST_CASE("explicit matrices are validated at load") {
  const std::string doc = serialize_instance(fixtures::triangle_breaker());
  const std::string msg = error_path<IntegrityError>(doc);
  CHECK(msg.find("triangle") != std::string::npos);
  CHECK(msg.find("a, b, c") != std::string::npos);
  CHECK(error_path<IntegrityError>(serialize_instance(fixtures::asymmetric())).find("symmetry") !=
        std::string::npos);
}
