#include "proxpt/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "proxpt/errors.hpp"

namespace proxpt {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Largest magnitude for which every integer is representable as a double.
constexpr double kMaxExactInt = 9007199254740992.0;

std::vector<std::size_t> sorted_by_rank(std::vector<std::size_t> indices,
                                        const std::vector<std::size_t>& rank) {
  std::sort(indices.begin(), indices.end(),
            [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });
  return indices;
}

}  // namespace

const char* to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::absolute:
      return "absolute";
    case MetricKind::euclidean:
      return "euclidean";
    case MetricKind::explicit_matrix:
      return "explicit";
  }
  return "?";
}

MetricKind metric_kind_from_string(const std::string& name) {
  if (name == "absolute") return MetricKind::absolute;
  if (name == "euclidean") return MetricKind::euclidean;
  if (name == "explicit") return MetricKind::explicit_matrix;
  throw ParamError("unknown metric kind '" + name + "'");
}

FiniteInstance::FiniteInstance(std::vector<Point> points, MetricSpec metric,
                               std::vector<PointId> a_ids, std::vector<PointId> b_ids,
                               std::vector<std::pair<PointId, PointId>> mapping, bool exact_int)
    : points_(std::move(points)),
      metric_(std::move(metric)),
      a_ids_(std::move(a_ids)),
      b_ids_(std::move(b_ids)),
      mapping_(std::move(mapping)),
      exact_int_(exact_int) {
  const std::size_t n = points_.size();
  if (n == 0) throw IntegrityError("instance has no points");

  const std::size_t arity = points_.front().coords.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = points_[i];
    if (p.id.empty()) throw IntegrityError("point #" + std::to_string(i) + " has an empty id");
    if (!index_.emplace(p.id, i).second) throw IntegrityError("duplicate point id '" + p.id + "'");
    if (p.coords.empty()) throw IntegrityError("point '" + p.id + "' has no coordinates");
    if (p.coords.size() != arity)
      throw IntegrityError("point '" + p.id + "' has arity " + std::to_string(p.coords.size()) +
                           ", expected " + std::to_string(arity));
    for (double c : p.coords)
      if (!std::isfinite(c)) throw IntegrityError("point '" + p.id + "' has a non-finite coordinate");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return points_[x].id < points_[y].id; });
  rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank_[order[r]] = r;

  switch (metric_.kind) {
    case MetricKind::absolute:
      if (arity != 1) throw IntegrityError("absolute metric requires scalar points");
      break;
    case MetricKind::euclidean:
      break;
    case MetricKind::explicit_matrix: {
      if (metric_.matrix.size() != n)
        throw IntegrityError("explicit matrix has " + std::to_string(metric_.matrix.size()) +
                             " rows for " + std::to_string(n) + " points");
      for (std::size_t i = 0; i < n; ++i) {
        if (metric_.matrix[i].size() != n)
          throw IntegrityError("explicit matrix row " + std::to_string(i) + " has " +
                               std::to_string(metric_.matrix[i].size()) + " entries");
        for (double v : metric_.matrix[i])
          if (!std::isfinite(v) || v < 0.0)
            throw IntegrityError("explicit matrix row " + std::to_string(i) +
                                 " has a negative or non-finite entry");
      }
      break;
    }
  }

  if (exact_int_) {
    if (metric_.kind != MetricKind::absolute)
      throw IntegrityError("exact-int mode requires the absolute metric");
    ints_.reserve(n);
    for (const Point& p : points_) {
      const double v = p.coords.front();
      if (v != std::floor(v) || std::fabs(v) > kMaxExactInt / 2)
        throw IntegrityError("exact-int mode: point '" + p.id + "' is not a representable integer");
      ints_.push_back(static_cast<std::int64_t>(v));
    }
  }

  auto resolve = [&](const std::vector<PointId>& ids, const char* set_name,
                     std::vector<char>& member) {
    member.assign(n, 0);
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (const PointId& id : ids) {
      auto it = index_.find(id);
      if (it == index_.end())
        throw IntegrityError(std::string(set_name) + " references unknown id '" + id + "'");
      if (member[it->second])
        throw IntegrityError(std::string(set_name) + " lists '" + id + "' twice");
      member[it->second] = 1;
      out.push_back(it->second);
    }
    if (out.empty()) throw IntegrityError(std::string(set_name) + " is empty");
    return out;
  };
  a_ = resolve(a_ids_, "A", in_a_);
  b_ = resolve(b_ids_, "B", in_b_);
  a_sorted_ = sorted_by_rank(a_, rank_);
  b_sorted_ = sorted_by_rank(b_, rank_);

  image_.assign(n, npos);
  for (const auto& [from, to] : mapping_) {
    auto f = index_.find(from);
    if (f == index_.end()) throw IntegrityError("T maps unknown id '" + from + "'");
    auto t = index_.find(to);
    if (t == index_.end())
      throw IntegrityError("T(" + from + ") = '" + to + "' is an unknown id");
    if (!in_a_[f->second]) throw IntegrityError("T is defined on '" + from + "', which is not in A");
    if (!in_b_[t->second])
      throw IntegrityError("T(" + from + ") = " + to + " does not lie in B");
    if (image_[f->second] != npos) throw IntegrityError("T maps '" + from + "' twice");
    image_[f->second] = t->second;
  }
  for (std::size_t a : a_)
    if (image_[a] == npos) throw IntegrityError("T is not defined on '" + points_[a].id + "'");
}

std::size_t FiniteInstance::index_of(const PointId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownId(id);
  return it->second;
}

std::optional<std::size_t> FiniteInstance::find(const PointId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteInstance::image(std::size_t a_index) const {
  const std::size_t img = image_.at(a_index);
  if (img == npos) throw UnknownId(points_[a_index].id + " (not in A)");
  return img;
}

double FiniteInstance::distance(std::size_t i, std::size_t j) const noexcept {
  if (exact_int_) {
    const std::int64_t diff = ints_[i] - ints_[j];
    return static_cast<double>(diff < 0 ? -diff : diff);
  }
  switch (metric_.kind) {
    case MetricKind::absolute:
      return std::fabs(points_[i].coords[0] - points_[j].coords[0]);
    case MetricKind::euclidean: {
      if (i == j) return 0.0;
      const auto& x = points_[i].coords;
      const auto& y = points_[j].coords;
      if (x.size() == 1) return std::fabs(x[0] - y[0]);
      if (x.size() == 2) return std::hypot(x[0] - y[0], x[1] - y[1]);
      double sum = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) sum += (x[k] - y[k]) * (x[k] - y[k]);
      return std::sqrt(sum);
    }
    case MetricKind::explicit_matrix:
      return metric_.matrix[i][j];
  }
  return 0.0;
}

double FiniteInstance::distance(const PointId& i, const PointId& j) const {
  return distance(index_of(i), index_of(j));
}

double eval_metric(const FiniteInstance& inst, const PointId& i, const PointId& j) {
  return inst.distance(i, j);
}

bool MetricAxiomReport::pass() const noexcept {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult* MetricAxiomReport::first_failure() const noexcept {
  for (const AxiomResult& r : axioms)
    if (!r.pass) return &r;
  return nullptr;
}

MetricAxiomReport validate_metric_axioms(const FiniteInstance& inst, double tol, bool force_scan) {
  MetricAxiomReport report;
  report.analytic = inst.metric().kind != MetricKind::explicit_matrix;
  AxiomResult identity{"identity"}, symmetry{"symmetry"}, triangle{"triangle"};

  if (!report.analytic || force_scan) {
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return inst.rank(x) < inst.rank(y); });

    auto fail = [&](AxiomResult& r, std::vector<std::size_t> tuple, double excess) {
      if (!r.pass) return;
      r.pass = false;
      r.excess = excess;
      for (std::size_t idx : tuple) r.witness.push_back(inst.id(idx));
    };

    for (std::size_t i : order) {
      for (std::size_t j : order) {
        const double dij = inst.distance(i, j);
        if (i == j) {
          if (dij > tol) fail(identity, {i, i}, dij);
        } else {
          if (dij <= tol) fail(identity, {i, j}, tol - dij);
          const double asym = std::fabs(dij - inst.distance(j, i));
          if (asym > tol) fail(symmetry, {i, j}, asym);
        }
      }
    }
    // Triangle over all ordered triples (a, b, c): d(a,c) <= d(a,b) + d(b,c).
    for (std::size_t a : order) {
      if (!triangle.pass) break;
      for (std::size_t b : order) {
        if (!triangle.pass) break;
        const double dab = inst.distance(a, b);
        for (std::size_t c : order) {
          const double excess = inst.distance(a, c) - dab - inst.distance(b, c);
          if (excess > tol) {
            fail(triangle, {a, b, c}, excess);
            break;
          }
        }
      }
    }
  }
  report.axioms = {identity, symmetry, triangle};
  return report;
}

}  // namespace proxpt
