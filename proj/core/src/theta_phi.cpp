#include "proxpt/theta_phi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "proxpt/errors.hpp"

namespace proxpt {

namespace {

void check_knots(const Knots& knots, double lower, const char* what) {
  if (knots.size() < 2) throw ParamError(std::string(what) + " table needs at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto [t, v] = knots[i];
    if (!std::isfinite(t) || !std::isfinite(v))
      throw ParamError(std::string(what) + " table has a non-finite knot");
    if (i > 0 && t <= knots[i - 1].first)
      throw ParamError(std::string(what) + " table knots must have strictly increasing t");
  }
  if (knots.front().first < lower)
    throw ParamError(std::string(what) + " table starts outside the function's domain");
}

double interpolate(const Knots& knots, double t, const char* what) {
  if (t < knots.front().first || t > knots.back().first) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s table: t = %.12g outside [%.12g, %.12g]", what, t,
                  knots.front().first, knots.back().first);
    throw DomainError(buf);
  }
  auto it = std::lower_bound(knots.begin(), knots.end(), t,
                             [](const auto& knot, double x) { return knot.first < x; });
  if (it->first == t) return it->second;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (t - lo.first) / (hi.first - lo.first);
  return lo.second + w * (hi.second - lo.second);
}

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Largest |f(t +/- delta) - f(t)| behaviour under delta = 1e-1 .. 1e-7.
// Returns {worst relative jump at the finest delta, sample t, refinement monotone}.
template <typename F>
AxiomCheck sampled_continuity(const std::string& axiom, F&& f, std::span<const double> grid,
                              double bound) {
  AxiomCheck check{axiom};
  double worst = 0.0;
  double worst_t = 0.0;
  bool monotone = true;
  for (double t : grid) {
    double ft = 0.0;
    try {
      ft = f(t);
    } catch (const DomainError&) {
      continue;
    }
    double previous = std::numeric_limits<double>::infinity();
    double finest = 0.0;
    bool sampled = false;
    for (double delta = 1e-1; delta > 5e-8; delta /= 10.0) {
      double jump = 0.0;
      try {
        jump = std::fabs(f(t + delta) - ft);
      } catch (const DomainError&) {
        try {
          jump = std::fabs(f(t - delta) - ft);
        } catch (const DomainError&) {
          continue;
        }
      }
      if (jump > previous * (1.0 + 1e-9) + 1e-15) monotone = false;
      previous = jump;
      finest = jump;
      sampled = true;
    }
    if (!sampled) continue;
    const double relative = finest / (1.0 + std::fabs(ft));
    if (relative > worst) {
      worst = relative;
      worst_t = t;
    }
  }
  check.margin = bound - worst;
  check.pass = monotone && worst <= bound;
  check.detail = "finest-delta jump " + format_g(worst) + " (relative) vs bound " + format_g(bound) +
                 (monotone ? "" : "; jumps do not shrink under refinement");
  if (!check.pass) check.witness = {worst_t};
  return check;
}

}  // namespace

ThetaSpec ThetaSpec::tabulated(Knots knots) {
  check_knots(knots, std::numeric_limits<double>::min(), "theta");
  if (knots.front().first <= 0.0) throw ParamError("theta table must start at t > 0");
  return ThetaSpec(ThetaKind::tabulated, std::move(knots));
}

ThetaSpec ThetaSpec::from_name(const std::string& name) {
  if (name == "exp") return exp();
  if (name == "exp_sqrt") return exp_sqrt();
  throw ParamError("unknown theta '" + name + "' (expected exp|exp_sqrt)");
}

std::string ThetaSpec::name() const {
  switch (kind_) {
    case ThetaKind::exp:
      return "exp";
    case ThetaKind::exp_sqrt:
      return "exp_sqrt";
    case ThetaKind::tabulated:
      return "tabulated";
  }
  return "?";
}

PhiSpec PhiSpec::pow(double k) {
  if (!(k > 0.0 && k < 1.0)) throw ParamError("pow exponent k must lie in (0, 1), got " + format_g(k));
  return PhiSpec(PhiKind::pow, k, {});
}

PhiSpec PhiSpec::tabulated(Knots knots) {
  check_knots(knots, 1.0, "phi");
  return PhiSpec(PhiKind::tabulated, 0.0, std::move(knots));
}

PhiSpec PhiSpec::from_string(const std::string& text) {
  if (text == "pow") return pow(0.5);
  if (text.rfind("pow:", 0) == 0) {
    const std::string arg = text.substr(4);
    std::size_t used = 0;
    double k = 0.0;
    try {
      k = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != arg.size()) throw ParamError("bad pow exponent '" + arg + "'");
    return pow(k);
  }
  throw ParamError("unknown phi '" + text + "' (expected pow or pow:<k>)");
}

std::string PhiSpec::name() const { return kind_ == PhiKind::pow ? "pow" : "tabulated"; }

double eval_theta(const ThetaSpec& spec, double t) {
  if (!(t > 0.0)) throw DomainError("theta is defined on (0, inf), got t = " + format_g(t));
  switch (spec.kind()) {
    case ThetaKind::exp:
      return std::exp(t);
    case ThetaKind::exp_sqrt:
      return std::exp(std::sqrt(t));
    case ThetaKind::tabulated:
      return interpolate(spec.knots(), t, "theta");
  }
  return 0.0;
}

double eval_phi(const PhiSpec& spec, double t) {
  if (!(t >= 1.0)) throw DomainError("phi is defined on [1, inf), got t = " + format_g(t));
  switch (spec.kind()) {
    case PhiKind::pow:
      return std::pow(t, spec.exponent());
    case PhiKind::tabulated:
      return interpolate(spec.knots(), t, "phi");
  }
  return 0.0;
}

double phi_iterate(const PhiSpec& spec, double t, std::size_t n) {
  if (!(t >= 1.0)) throw DomainError("phi is defined on [1, inf), got t = " + format_g(t));
  for (std::size_t i = 0; i < n; ++i) t = eval_phi(spec, t);
  return t;
}

bool FunctionReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* FunctionReport::find(const std::string& axiom) const noexcept {
  for (const AxiomCheck& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

FunctionReport validate_theta(const ThetaSpec& spec, std::span<const double> grid, std::size_t m,
                              const ValidationOptions& options) {
  FunctionReport report{spec.name(), {}};
  auto theta = [&](double t) { return eval_theta(spec, t); };

  AxiomCheck domain{"grid"};
  domain.detail = "grid of " + std::to_string(grid.size()) + " sample(s), m = " + std::to_string(m);
  if (grid.size() < 3 || !std::is_sorted(grid.begin(), grid.end()) || grid.front() <= 0.0 || m < 2) {
    domain.pass = false;
    domain.detail += "; need >= 3 ascending positive samples and m >= 2";
    report.checks.push_back(domain);
    return report;
  }
  report.checks.push_back(domain);

  // Values on the grid; an out-of-domain sample fails every check that needs it.
  std::vector<double> values;
  std::vector<double> failed_samples;
  for (double t : grid) {
    try {
      values.push_back(theta(t));
    } catch (const DomainError&) {
      failed_samples.push_back(t);
      values.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }

  AxiomCheck codomain{"codomain"};
  codomain.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double gap = values[i] - 1.0;
    if (!(gap > 0.0)) {
      if (codomain.pass) codomain.witness = {grid[i]};
      codomain.pass = false;
    }
    if (std::isfinite(gap)) codomain.margin = std::min(codomain.margin, gap);
  }
  codomain.detail = "min theta(t) - 1 on grid = " + format_g(codomain.margin);
  report.checks.push_back(codomain);

  AxiomCheck theta1{"theta1"};
  theta1.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double rise = values[i + 1] - values[i];
    if (!(rise > 0.0) && theta1.pass) {
      theta1.pass = false;
      theta1.witness = {grid[i], grid[i + 1]};
    }
    if (std::isfinite(rise)) theta1.margin = std::min(theta1.margin, rise);
  }
  theta1.detail = theta1.pass ? "strictly increasing on grid, min rise " + format_g(theta1.margin)
                              : "not increasing between t = " + format_g(theta1.witness[0]) +
                                    " and t = " + format_g(theta1.witness[1]);
  report.checks.push_back(theta1);

  AxiomCheck theta2{"theta2"};
  {
    double previous = std::numeric_limits<double>::infinity();
    bool monotone = true;
    bool defined = true;
    double tail = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= m; ++i) {
      const double t = 1.0 / static_cast<double>(i);
      double v = 0.0;
      try {
        v = theta(t);
      } catch (const DomainError&) {
        defined = false;
        theta2.witness = {t};
        break;
      }
      if (v > previous && monotone) {
        monotone = false;
        theta2.witness = {t};
      }
      previous = v;
      tail = v - 1.0;
    }
    // "only if": grid samples above 1/m stay bounded away from 1.
    double floor_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid[i] > 1.0 / static_cast<double>(m) && std::isfinite(values[i]))
        floor_gap = std::min(floor_gap, values[i] - 1.0);
    const bool separated = tail < floor_gap;
    theta2.pass = defined && monotone && tail > 0.0 && tail <= options.vanish_bound && separated;
    theta2.margin = options.vanish_bound - tail;
    theta2.detail = defined ? "theta(1/" + std::to_string(m) + ") - 1 = " + format_g(tail) +
                                  " (bound " + format_g(options.vanish_bound) + ")" +
                                  (monotone ? "" : "; not monotone along 1/i") +
                                  (separated ? "" : "; does not separate from grid values")
                            : "theta undefined along the vanishing sequence";
  }
  report.checks.push_back(theta2);

  report.checks.push_back(sampled_continuity("theta3", theta, grid, options.continuity_bound));

  if (!failed_samples.empty()) {
    AxiomCheck undefined{"defined"};
    undefined.pass = false;
    undefined.witness = failed_samples;
    undefined.detail = "theta undefined at " + std::to_string(failed_samples.size()) + " grid sample(s)";
    report.checks.push_back(undefined);
  }
  return report;
}

FunctionReport validate_phi(const PhiSpec& spec, std::span<const double> grid_in, std::size_t depth,
                            const ValidationOptions& options) {
  FunctionReport report{spec.name(), {}};
  auto phi = [&](double t) { return eval_phi(spec, t); };

  std::vector<double> grid(grid_in.begin(), grid_in.end());
  std::sort(grid.begin(), grid.end());

  AxiomCheck domain{"grid"};
  domain.detail = "grid of " + std::to_string(grid.size()) + " sample(s), depth " + std::to_string(depth);
  if (grid.empty() || grid.front() <= 1.0) {
    domain.pass = false;
    domain.detail += "; samples must lie in (1, inf)";
    if (!grid.empty()) domain.witness = {grid.front()};
    report.checks.push_back(domain);
    return report;
  }
  report.checks.push_back(domain);

  std::vector<double> values;
  for (double t : grid) {
    try {
      values.push_back(phi(t));
    } catch (const DomainError&) {
      values.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }

  AxiomCheck codomain{"codomain"};
  codomain.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(values[i] >= 1.0)) {
      if (codomain.pass) codomain.witness = {grid[i]};
      codomain.pass = false;
    } else {
      codomain.margin = std::min(codomain.margin, values[i] - 1.0);
    }
  }
  codomain.detail = "phi maps the grid into [1, inf)";
  report.checks.push_back(codomain);

  AxiomCheck phi1{"phi1"};
  phi1.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double rise = values[i + 1] - values[i];
    if (!(rise >= 0.0) && phi1.pass) {
      phi1.pass = false;
      phi1.witness = {grid[i], grid[i + 1]};
    }
    if (std::isfinite(rise)) phi1.margin = std::min(phi1.margin, rise);
  }
  if (grid.size() < 2) phi1.margin = 0.0;
  phi1.detail = phi1.pass ? "non-decreasing on grid" : "decreases between grid samples";
  report.checks.push_back(phi1);

  AxiomCheck phi2{"phi2"};
  {
    double bound = 0.0;  // max over grid of phi^depth(t) - 1
    double worst_ratio = 0.0;
    for (double t : grid) {
      double x = t;
      bool ok = true;
      for (std::size_t j = 0; j < depth; ++j) {
        double next = 0.0;
        try {
          next = phi(x);
        } catch (const DomainError&) {
          ok = false;
          break;
        }
        if (next > x || next < 1.0) {
          ok = false;
          break;
        }
        x = next;
      }
      const double gap = x - 1.0;
      const double ratio = gap / (t - 1.0);
      bound = std::max(bound, gap);
      worst_ratio = std::max(worst_ratio, ratio);
      if ((!ok || ratio > options.decay_fraction) && phi2.pass) {
        phi2.pass = false;
        phi2.witness = {t};
      }
    }
    phi2.margin = options.decay_fraction - worst_ratio;
    phi2.detail = "max phi^" + std::to_string(depth) + "(t) - 1 = " + format_g(bound) +
                  ", worst gap ratio " + format_g(worst_ratio);
  }
  report.checks.push_back(phi2);

  report.checks.push_back(sampled_continuity("phi3", phi, grid, options.continuity_bound));

  AxiomCheck fixed{"phi_at_one"};
  try {
    const double at_one = phi(1.0);
    fixed.pass = at_one == 1.0;
    fixed.margin = -std::fabs(at_one - 1.0);
    fixed.detail = "phi(1) = " + format_g(at_one);
  } catch (const DomainError&) {
    fixed.pass = false;
    fixed.margin = -std::numeric_limits<double>::infinity();
    fixed.detail = "phi undefined at 1";
  }
  report.checks.push_back(fixed);

  AxiomCheck below{"phi_below_identity"};
  below.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double slack = grid[i] - values[i];
    if (!(slack > 0.0)) {
      if (below.pass) below.witness = {grid[i]};
      below.pass = false;
    }
    if (std::isfinite(slack)) below.margin = std::min(below.margin, slack);
  }
  below.detail = "min t - phi(t) on grid = " + format_g(below.margin);
  report.checks.push_back(below);
  return report;
}

void require_admissible(const ThetaSpec& theta, const PhiSpec& phi) {
  if (!theta.is_builtin()) {
    std::vector<double> grid;
    for (const auto& [t, v] : theta.knots()) grid.push_back(t);
    if (grid.size() < 3) grid.insert(grid.begin() + 1, 0.5 * (grid[0] + grid[1]));
    const double first = theta.knots().front().first;
    const std::size_t m = static_cast<std::size_t>(std::min(1e6, std::floor(1.0 / first)));
    FunctionReport r = validate_theta(theta, grid, std::max<std::size_t>(m, 2));
    if (!r.pass()) {
      for (const AxiomCheck& c : r.checks)
        if (!c.pass) throw ParamError("tabulated theta fails validation (" + c.axiom + "): " + c.detail);
    }
  }
  if (!phi.is_builtin()) {
    std::vector<double> grid;
    for (const auto& [t, v] : phi.knots())
      if (t > 1.0) grid.push_back(t);
    FunctionReport r = validate_phi(phi, grid, 1000);
    if (!r.pass()) {
      for (const AxiomCheck& c : r.checks)
        if (!c.pass) throw ParamError("tabulated phi fails validation (" + c.axiom + "): " + c.detail);
    }
  }
}

}  // namespace proxpt
