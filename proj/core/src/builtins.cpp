#include "proxpt/builtins.hpp"

#include <cmath>
#include <string>

#include "proxpt/errors.hpp"

namespace proxpt {

namespace {

std::string padded(char prefix, std::size_t i, std::size_t width) {
  std::string digits = std::to_string(i);
  return prefix + std::string(width - std::min(width, digits.size()), '0') + digits;
}

}  // namespace

FiniteInstance triangular(std::size_t n, bool exact_int) {
  if (n < 1 || n > 1'000'000) throw ParamError("triangular size must lie in [1, 1e6]");
  std::vector<Point> points;
  std::vector<PointId> a, b;
  std::vector<std::pair<PointId, PointId>> mapping;
  auto lambda = [](std::size_t m) { return m * (m + 1) / 2; };
  for (std::size_t m = 1; m <= 3 * n; ++m)
    points.push_back({std::to_string(lambda(m)), {static_cast<double>(lambda(m))}});
  for (std::size_t k = 1; k <= n; ++k) {
    const std::string in_a = std::to_string(lambda(3 * k));
    const std::string in_b = std::to_string(lambda(3 * k - 1));
    a.push_back(in_a);
    b.push_back(in_b);
    mapping.emplace_back(in_a, in_b);
  }
  return FiniteInstance(std::move(points), MetricSpec{MetricKind::absolute, {}}, std::move(a), std::move(b),
                        std::move(mapping), exact_int);
}

FiniteInstance quartic(std::size_t k) {
  if (k < 1 || k > 20) throw ParamError("quartic depth must lie in [1, 20]");
  // ordinates[0] = 0, ordinates[j + 1] = 4^-j
  std::vector<double> ordinates{0.0};
  for (std::size_t j = 0; j <= k; ++j) ordinates.push_back(std::ldexp(1.0, -2 * static_cast<int>(j)));

  std::vector<Point> points;
  std::vector<PointId> a, b;
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    points.push_back({"a" + std::to_string(i), {0.0, ordinates[i]}});
    a.push_back(points.back().id);
  }
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    points.push_back({"b" + std::to_string(i), {1.0, ordinates[i]}});
    b.push_back(points.back().id);
  }
  std::vector<std::pair<PointId, PointId>> mapping;
  const std::size_t last = ordinates.size() - 1;  // y = 4^-k
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const std::size_t target = (i == 0 || i == last) ? 0 : i + 1;
    mapping.emplace_back("a" + std::to_string(i), "b" + std::to_string(target));
  }
  return FiniteInstance(std::move(points), MetricSpec{MetricKind::euclidean, {}}, std::move(a), std::move(b),
                        std::move(mapping));
}

FiniteInstance strip() {
  std::vector<Point> points{{"a0", {0.0, 0.0}}, {"a1", {0.0, 1.0}}, {"b0", {2.0, 0.0}}, {"b1", {2.0, 1.0}}};
  return FiniteInstance(std::move(points), MetricSpec{MetricKind::euclidean, {}}, {"a0", "a1"}, {"b0", "b1"},
                        {{"a0", "b0"}, {"a1", "b1"}});
}

FiniteInstance chain(std::size_t n) {
  if (n < 2 || n > 100'000) throw ParamError("chain size must lie in [2, 1e5]");
  const std::size_t width = std::to_string(n - 1).size();
  std::vector<Point> points;
  std::vector<PointId> a, b;
  std::vector<std::pair<PointId, PointId>> mapping;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = static_cast<double>(i) / static_cast<double>(n);
    points.push_back({padded('a', i, width), {0.0, y}});
    a.push_back(points.back().id);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double y = static_cast<double>(i) / static_cast<double>(n);
    points.push_back({padded('b', i, width), {1.0, y}});
    b.push_back(points.back().id);
  }
  for (std::size_t i = 0; i < n; ++i) mapping.emplace_back(padded('a', i, width), padded('b', i / 2, width));
  return FiniteInstance(std::move(points), MetricSpec{MetricKind::euclidean, {}}, std::move(a), std::move(b),
                        std::move(mapping));
}

FiniteInstance generate_builtin(const std::string& name, std::size_t size, bool exact_int) {
  if (name == "triangular") return triangular(size, exact_int);
  if (exact_int) throw ParamError("exact-int mode only applies to the triangular instance");
  if (name == "quartic") return quartic(size);
  if (name == "strip") return strip();
  if (name == "chain") return chain(size);
  throw ParamError("unknown builtin '" + name + "' (expected triangular|quartic|strip|chain)");
}

std::size_t default_builtin_size(const std::string& name) {
  if (name == "triangular") return 10;
  if (name == "quartic") return 3;
  if (name == "chain") return 1000;
  return 1;
}

}  // namespace proxpt
