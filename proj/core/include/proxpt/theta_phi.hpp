#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace proxpt {

/// Piecewise-linear table of (t, value) knots with strictly increasing t.
using Knots = std::vector<std::pair<double, double>>;

enum class ThetaKind { exp, exp_sqrt, tabulated };

/// A member (or candidate member) of the family of strictly increasing,
/// continuous maps (0, inf) -> (1, inf) that send vanishing sequences to 1.
class ThetaSpec {
 public:
  static ThetaSpec exp() { return ThetaSpec(ThetaKind::exp, {}); }
  static ThetaSpec exp_sqrt() { return ThetaSpec(ThetaKind::exp_sqrt, {}); }
  /// Accepted for validation; the contraction verifier only uses it once it validates.
  static ThetaSpec tabulated(Knots knots);
  /// "exp" | "exp_sqrt"
  static ThetaSpec from_name(const std::string& name);

  ThetaKind kind() const noexcept { return kind_; }
  std::string name() const;
  bool is_builtin() const noexcept { return kind_ != ThetaKind::tabulated; }
  const Knots& knots() const noexcept { return knots_; }

  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;

 private:
  ThetaSpec(ThetaKind kind, Knots knots) : kind_(kind), knots_(std::move(knots)) {}
  ThetaKind kind_;
  Knots knots_;
};

enum class PhiKind { pow, tabulated };

/// A member (or candidate member) of the family of increasing continuous
/// self-maps of [1, inf) whose iterates tend to 1.
class PhiSpec {
 public:
  /// t^k, k strictly inside (0, 1). ParamError otherwise.
  static PhiSpec pow(double k);
  static PhiSpec tabulated(Knots knots);
  /// "pow" (k = 1/2) or "pow:<k>"
  static PhiSpec from_string(const std::string& text);

  PhiKind kind() const noexcept { return kind_; }
  std::string name() const;
  double exponent() const noexcept { return k_; }
  bool is_builtin() const noexcept { return kind_ != PhiKind::tabulated; }
  const Knots& knots() const noexcept { return knots_; }

  friend bool operator==(const PhiSpec&, const PhiSpec&) = default;

 private:
  PhiSpec(PhiKind kind, double k, Knots knots) : kind_(kind), k_(k), knots_(std::move(knots)) {}
  PhiKind kind_;
  double k_ = 0.5;
  Knots knots_;
};

/// DomainError if t <= 0 (or outside the table of a tabulated spec).
double eval_theta(const ThetaSpec& spec, double t);
/// DomainError if t < 1 (or outside the table of a tabulated spec).
double eval_phi(const PhiSpec& spec, double t);
/// n-fold composition of phi; n = 0 returns t.
double phi_iterate(const PhiSpec& spec, double t, std::size_t n);

/// One numerical check. `margin` is signed: >= 0 on pass, how far from the
/// threshold the evidence sits.
struct AxiomCheck {
  AxiomCheck() = default;
  explicit AxiomCheck(std::string name) : axiom(std::move(name)) {}

  std::string axiom;
  bool pass = true;
  double margin = 0.0;
  std::string detail;
  /// Offending sample(s), e.g. the grid pair where monotonicity breaks.
  std::vector<double> witness;
};

struct FunctionReport {
  std::string function;  // spec name
  std::vector<AxiomCheck> checks;

  bool pass() const noexcept;
  const AxiomCheck* find(const std::string& axiom) const noexcept;
};

struct ValidationOptions {
  /// theta: theta(1/m) - 1 must fall below this.
  double vanish_bound = 1e-2;
  /// Sampled continuity: |f(t+delta) - f(t)| at the finest delta, relative to 1 + |f(t)|.
  double continuity_bound = 1e-3;
  /// phi: phi^n(t) - 1 must be at most this fraction of t - 1.
  double decay_fraction = 0.5;
};

/// theta1 strict increase on `grid`, theta2 along t = 1/i for i = 1..m,
/// theta3 sampled continuity, plus the codomain (values > 1).
FunctionReport validate_theta(const ThetaSpec& spec, std::span<const double> grid, std::size_t m,
                              const ValidationOptions& options = {});

/// phi1 monotone, phi2 decay of phi^depth(t) - 1, phi3 sampled continuity,
/// phi(1) = 1 and phi(t) < t on `grid` (which must lie in (1, inf)).
FunctionReport validate_phi(const PhiSpec& spec, std::span<const double> grid, std::size_t depth,
                            const ValidationOptions& options = {});

/// Builtins pass trivially; tabulated specs are validated on their knots and
/// rejected with ParamError on failure.
void require_admissible(const ThetaSpec& theta, const PhiSpec& phi);

}  // namespace proxpt
