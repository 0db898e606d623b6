#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "proxpt/builtins.hpp"
#include "proxpt/metric.hpp"

namespace fixtures {

using proxpt::FiniteInstance;
using proxpt::MetricKind;
using proxpt::MetricSpec;
using proxpt::Point;

// x1,x2 in A; y1,y2 in B. Both (xi, yi) attain d(A,B) = 1 but d(x1,x2) = 2 != d(y1,y2) = 1.
inline FiniteInstance p_property_breaker() {
  std::vector<Point> pts{{"x1", {0}}, {"x2", {0}}, {"y1", {0}}, {"y2", {0}}};
  MetricSpec m{MetricKind::explicit_matrix,
               {{0, 2, 1, 2},
                {2, 0, 2, 1},
                {1, 2, 0, 1},
                {2, 1, 1, 0}}};
  return FiniteInstance(pts, m, {"x1", "x2"}, {"y1", "y2"}, {{"x1", "y1"}, {"x2", "y2"}});
}

// d(a,c) = 3 > d(a,b) + d(b,c) = 2.
inline FiniteInstance triangle_breaker() {
  std::vector<Point> pts{{"a", {0}}, {"b", {0}}, {"c", {0}}};
  MetricSpec m{MetricKind::explicit_matrix, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}};
  return FiniteInstance(pts, m, {"a", "c"}, {"b"}, {{"a", "b"}, {"c", "b"}});
}

// d(a,b) = 1 but d(b,a) = 2.
inline FiniteInstance asymmetric() {
  std::vector<Point> pts{{"a", {0}}, {"b", {0}}};
  MetricSpec m{MetricKind::explicit_matrix, {{0, 1}, {2, 0}}};
  return FiniteInstance(pts, m, {"a"}, {"b"}, {{"a", "b"}});
}

// Quartic depth 3 with an extra B point bx = (3,1) far from A, and T(a1) = bx.
inline FiniteInstance quartic_range_breaker() {
  const FiniteInstance q = proxpt::quartic(3);
  std::vector<Point> pts = q.points();
  pts.push_back({"bx", {3.0, 1.0}});
  std::vector<std::string> a, b;
  for (std::size_t i : q.a()) a.push_back(q.id(i));
  for (std::size_t i : q.b()) b.push_back(q.id(i));
  b.push_back("bx");
  auto mapping = q.mapping();
  for (auto& [from, to] : mapping)
    if (from == "a1") to = "bx";
  return FiniteInstance(pts, MetricSpec{MetricKind::euclidean, {}}, a, b, mapping);
}

// A and B share the point "s".
inline FiniteInstance overlapping() {
  std::vector<Point> pts{{"p", {0.0, 0.0}}, {"s", {1.0, 0.0}}, {"q", {3.0, 0.0}}};
  return FiniteInstance(pts, MetricSpec{MetricKind::euclidean, {}}, {"p", "s"}, {"s", "q"},
                        {{"p", "q"}, {"s", "s"}});
}

// Random planar instance on an integer grid, distinct coordinates, random total T.
inline FiniteInstance random_grid(std::mt19937& rng, int grid = 4, std::size_t max_side = 6) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_int_distribution<int> coord(0, grid);
  const std::size_t na = side(rng), nb = side(rng);
  std::set<std::pair<int, int>> used;
  std::vector<Point> pts;
  auto fresh = [&](const std::string& id) {
    for (;;) {
      const std::pair<int, int> c{coord(rng), coord(rng)};
      if (used.insert(c).second) {
        pts.push_back({id, {double(c.first), double(c.second)}});
        return;
      }
    }
  };
  std::vector<std::string> a, b;
  for (std::size_t i = 0; i < na; ++i) fresh(a.emplace_back("a" + std::to_string(i)));
  for (std::size_t i = 0; i < nb; ++i) fresh(b.emplace_back("b" + std::to_string(i)));
  std::uniform_int_distribution<std::size_t> pick(0, nb - 1);
  std::vector<std::pair<std::string, std::string>> mapping;
  for (const auto& id : a) mapping.emplace_back(id, b[pick(rng)]);
  std::shuffle(pts.begin(), pts.end(), rng);
  return FiniteInstance(pts, MetricSpec{MetricKind::euclidean, {}}, a, b, mapping);
}

// A = {(0,y)}, B = {(1,y)} over random integer ordinates; T sends y to the
// ordinate nearest r*y for a random r in [0, 0.6]. Contractive fairly often.
inline FiniteInstance random_ladder(std::mt19937& rng) {
  const int top = std::uniform_int_distribution<int>(4, 40)(rng);
  const int want = std::uniform_int_distribution<int>(2, 8)(rng);
  std::vector<int> all(top + 1);
  for (int i = 0; i <= top; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> ys(all.begin(), all.begin() + std::min<int>(want, top + 1));
  std::sort(ys.begin(), ys.end());
  const double r = std::uniform_real_distribution<double>(0.0, 0.6)(rng);

  std::vector<Point> pts;
  std::vector<std::string> a, b;
  for (int y : ys) {
    a.push_back("a" + std::to_string(y));
    b.push_back("b" + std::to_string(y));
    pts.push_back({a.back(), {0.0, double(y)}});
    pts.push_back({b.back(), {1.0, double(y)}});
  }
  std::vector<std::pair<std::string, std::string>> mapping;
  for (int y : ys) {
    int best = ys.front();
    for (int z : ys)
      if (std::abs(z - r * y) < std::abs(best - r * y)) best = z;
    mapping.emplace_back("a" + std::to_string(y), "b" + std::to_string(best));
  }
  return FiniteInstance(pts, MetricSpec{MetricKind::euclidean, {}}, a, b, mapping);
}

// Same geometry with every coordinate multiplied by s.
inline FiniteInstance scaled(const FiniteInstance& inst, double s) {
  std::vector<Point> pts = inst.points();
  for (auto& p : pts)
    for (double& c : p.coords) c *= s;
  std::vector<std::string> a, b;
  for (std::size_t i : inst.a()) a.push_back(inst.id(i));
  for (std::size_t i : inst.b()) b.push_back(inst.id(i));
  return FiniteInstance(pts, inst.metric(), a, b, inst.mapping());
}

// Ids replaced through a random bijection onto fresh labels.
inline FiniteInstance relabeled(const FiniteInstance& inst, std::mt19937& rng) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < inst.size(); ++i) labels.push_back("p" + std::to_string(100 + i));
  std::shuffle(labels.begin(), labels.end(), rng);
  auto rename = [&](const std::string& id) { return labels[inst.index_of(id)]; };
  std::vector<Point> pts = inst.points();
  for (auto& p : pts) p.id = rename(p.id);
  std::vector<std::string> a, b;
  for (std::size_t i : inst.a()) a.push_back(labels[i]);
  for (std::size_t i : inst.b()) b.push_back(labels[i]);
  auto mapping = inst.mapping();
  for (auto& [from, to] : mapping) {
    from = rename(from);
    to = rename(to);
  }
  return FiniteInstance(pts, inst.metric(), a, b, mapping);
}

}  // namespace fixtures
