#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace proxpt {

using PointId = std::string;

/// Default absolute tolerance for every equality test against d(A,B).
inline constexpr double kDefaultTol = 1e-9;

/// A labelled point. Scalars are stored as one-element coordinate vectors.
struct Point {
  PointId id;
  std::vector<double> coords;

  bool is_scalar() const noexcept { return coords.size() == 1; }
  friend bool operator==(const Point&, const Point&) = default;
};

enum class MetricKind { absolute, euclidean, explicit_matrix };

const char* to_string(MetricKind kind) noexcept;
MetricKind metric_kind_from_string(const std::string& name);

struct MetricSpec {
  MetricKind kind = MetricKind::euclidean;
  /// Row-major distances indexed by point order; only used by explicit_matrix.
  std::vector<std::vector<double>> matrix;

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// Finite metric space together with the subsets A, B and the table T: A -> B.
///
/// Construction checks shape only (unique ids, common arity, T total on A with
/// images in B, square non-negative matrix). Metric axioms are a separate check,
/// see validate_metric_axioms(); load_instance() runs it eagerly.
///
/// Points are addressed by their position in points(). `rank(i)` gives the
/// lexicographic rank of point i's id, which every deterministic ordering uses.
class FiniteInstance {
 public:
  FiniteInstance(std::vector<Point> points, MetricSpec metric, std::vector<PointId> a_ids,
                 std::vector<PointId> b_ids, std::vector<std::pair<PointId, PointId>> mapping,
                 bool exact_int = false);

  const std::vector<Point>& points() const noexcept { return points_; }
  const MetricSpec& metric() const noexcept { return metric_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool exact_int() const noexcept { return exact_int_; }

  /// A and B as point indices, in declaration order.
  std::span<const std::size_t> a() const noexcept { return a_; }
  std::span<const std::size_t> b() const noexcept { return b_; }
  /// A and B as point indices, sorted by id.
  std::span<const std::size_t> a_sorted() const noexcept { return a_sorted_; }
  std::span<const std::size_t> b_sorted() const noexcept { return b_sorted_; }

  /// Declared (a-id, b-id) mapping entries, in declaration order.
  const std::vector<std::pair<PointId, PointId>>& mapping() const noexcept { return mapping_; }

  std::size_t index_of(const PointId& id) const;  // throws UnknownId
  std::optional<std::size_t> find(const PointId& id) const;
  const PointId& id(std::size_t index) const { return points_.at(index).id; }
  std::size_t rank(std::size_t index) const noexcept { return rank_[index]; }

  bool in_a(std::size_t index) const noexcept { return in_a_[index]; }
  bool in_b(std::size_t index) const noexcept { return in_b_[index]; }

  /// Image T(a) as a point index. `a_index` must be in A.
  std::size_t image(std::size_t a_index) const;

  double distance(std::size_t i, std::size_t j) const noexcept;
  double distance(const PointId& i, const PointId& j) const;

  /// Integer value of a scalar point; only meaningful in exact-int mode.
  std::int64_t integer_value(std::size_t index) const { return ints_.at(index); }

 private:
  std::vector<Point> points_;
  MetricSpec metric_;
  std::vector<PointId> a_ids_;
  std::vector<PointId> b_ids_;
  std::vector<std::pair<PointId, PointId>> mapping_;
  bool exact_int_ = false;

  std::unordered_map<PointId, std::size_t> index_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> a_, b_, a_sorted_, b_sorted_;
  std::vector<char> in_a_, in_b_;
  std::vector<std::size_t> image_;  // indexed by point index; npos outside A
  std::vector<std::int64_t> ints_;
};

/// Free-function form of FiniteInstance::distance(const PointId&, const PointId&).
double eval_metric(const FiniteInstance& inst, const PointId& i, const PointId& j);

struct AxiomResult {
  AxiomResult() = default;
  explicit AxiomResult(std::string name) : axiom(std::move(name)) {}

  std::string axiom;
  bool pass = true;
  /// Ids of the first violating tuple in id order (pair or triple); empty on pass.
  std::vector<PointId> witness;
  /// Size of the violation (e.g. d(a,c) - d(a,b) - d(b,c)); 0 on pass.
  double excess = 0.0;
};

struct MetricAxiomReport {
  std::vector<AxiomResult> axioms;  // identity, symmetry, triangle
  bool analytic = false;            // absolute/euclidean pass by construction
  bool pass() const noexcept;
  const AxiomResult* first_failure() const noexcept;
};

/// Identity of indiscernibles, symmetry and the triangle inequality over all
/// pairs/triples (in id order) within `tol`. Absolute and euclidean metrics pass
/// without scanning unless `force_scan` is set.
MetricAxiomReport validate_metric_axioms(const FiniteInstance& inst, double tol = kDefaultTol,
                                         bool force_scan = false);

}  // namespace proxpt
