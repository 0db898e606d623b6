#pragma once

// Direct-loop reference for the contraction inequality. Shares nothing with the
// library beyond the instance accessors: distances come from raw coordinates
// (or the raw matrix), theta = exp and phi = pow are evaluated with <cmath>.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "proxpt/metric.hpp"

namespace oracle {

struct Violation {
  std::string u1, u2, v1, v2;
  double lhs = 0.0;
  double rhs = 0.0;
  bool rhs_defined = true;
};

struct Result {
  std::size_t admissible = 0;
  std::size_t filtered = 0;
  std::vector<Violation> violations;  // sorted by (u1, u2, v1, v2)
};

class Space {
 public:
  explicit Space(const proxpt::FiniteInstance& inst) : inst_(inst) {
    for (std::size_t i = 0; i < inst.points().size(); ++i) pos_[inst.points()[i].id] = i;
    for (std::size_t i : inst.a()) a_.push_back(inst.points()[i].id);
    for (std::size_t i : inst.b()) b_.push_back(inst.points()[i].id);
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    for (const auto& [from, to] : inst.mapping()) t_[from] = to;
  }

  double d(const std::string& x, const std::string& y) const {
    const std::size_t i = pos_.at(x), j = pos_.at(y);
    const auto& m = inst_.metric();
    if (m.kind == proxpt::MetricKind::explicit_matrix) return m.matrix[i][j];
    const auto& p = inst_.points()[i].coords;
    const auto& q = inst_.points()[j].coords;
    if (m.kind == proxpt::MetricKind::absolute) return std::fabs(p[0] - q[0]);
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
    return std::sqrt(s);
  }

  const std::string& T(const std::string& a) const { return t_.at(a); }
  const std::vector<std::string>& A() const { return a_; }
  const std::vector<std::string>& B() const { return b_; }

  double dab() const {
    double best = INFINITY;
    for (const auto& a : a_)
      for (const auto& b : b_) best = std::min(best, d(a, b));
    return best;
  }

  std::vector<std::pair<std::string, std::string>> proximal_pairs(double tol) const {
    const double m = dab();
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& u : a_)
      for (const auto& v : a_)
        if (std::fabs(d(u, T(v)) - m) <= tol) out.emplace_back(u, v);
    return out;
  }

 private:
  const proxpt::FiniteInstance& inst_;
  std::map<std::string, std::size_t> pos_;
  std::vector<std::string> a_, b_;
  std::map<std::string, std::string> t_;
};

// theta = exp, phi = pow(k); positive-distance admissibility.
inline Result verify(const proxpt::FiniteInstance& inst, bool second_kind, double k, double a, double b,
                     double c, double h, double tol = 1e-9) {
  const Space s(inst);
  const auto pairs = s.proximal_pairs(tol);
  Result r;
  for (const auto& [u1, v1] : pairs) {
    for (const auto& [u2, v2] : pairs) {
      const std::string U1 = second_kind ? s.T(u1) : u1;
      const std::string U2 = second_kind ? s.T(u2) : u2;
      const std::string V1 = second_kind ? s.T(v1) : v1;
      const std::string V2 = second_kind ? s.T(v2) : v2;
      const double left = s.d(U1, U2);
      if (left <= tol) {
        ++r.filtered;
        continue;
      }
      ++r.admissible;
      const double arg = a * s.d(V1, V2) + b * s.d(U1, V1) + c * s.d(U2, V2) + h * (s.d(V1, U2) + s.d(V2, U1));
      const double lhs = std::exp(left);
      if (arg <= tol) {
        r.violations.push_back({u1, u2, v1, v2, lhs, 0.0, false});
        continue;
      }
      const double rhs = std::pow(std::exp(arg), k);
      if (lhs > rhs + tol) r.violations.push_back({u1, u2, v1, v2, lhs, rhs, true});
    }
  }
  std::sort(r.violations.begin(), r.violations.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.u1, x.u2, x.v1, x.v2) < std::tie(y.u1, y.u2, y.v1, y.v2);
  });
  return r;
}

}  // namespace oracle
