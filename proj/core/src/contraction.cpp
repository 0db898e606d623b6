#include "proxpt/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "proxpt/errors.hpp"
#include "proxpt/parallel.hpp"
#include "proxpt/proximal.hpp"

namespace proxpt {

ContractionParams::ContractionParams(double a, double b, double c, double h, double tol)
    : a_(a), b_(b), c_(c), h_(h) {
  for (double v : {a, b, c, h})
    if (!std::isfinite(v) || v < 0.0) throw ParamError("contraction coefficients must be finite and >= 0");
  if (a + b + c + 2.0 * h > 1.0 + tol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "a + b + c + 2h = %.12g exceeds 1", a + b + c + 2.0 * h);
    throw ParamError(buf);
  }
  if (!(c + h < 1.0)) throw ParamError("c + h must be < 1");
}

ContractionParams ContractionParams::parse(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used == 0 || used != item.size()) throw ParamError("bad coefficient '" + item + "' in '" + text + "'");
    values.push_back(v);
  }
  if (values.size() != 4) throw ParamError("expected four coefficients a,b,c,h, got '" + text + "'");
  return ContractionParams(values[0], values[1], values[2], values[3]);
}

const char* to_string(ContractionKind kind) noexcept {
  return kind == ContractionKind::first ? "first" : "second";
}

const char* to_string(AdmissibilityFilter filter) noexcept {
  return filter == AdmissibilityFilter::positive_distance ? "positive_distance" : "literal";
}

AdmissibilityFilter admissibility_filter_from_string(const std::string& name) {
  if (name == "positive_distance") return AdmissibilityFilter::positive_distance;
  if (name == "literal") return AdmissibilityFilter::literal;
  throw ParamError("unknown admissibility filter '" + name + "'");
}

const char* to_string(VerificationStatus status) noexcept {
  switch (status) {
    case VerificationStatus::holds:
      return "holds";
    case VerificationStatus::violated:
      return "violated";
    case VerificationStatus::vacuous:
      return "vacuous";
  }
  return "?";
}

std::vector<ProximalPair> proximal_pairs(const FiniteInstance& inst, double tol) {
  if (inst.exact_int()) tol = 0.0;
  const double dab = set_distance(inst, tol).dab;
  std::vector<ProximalPair> out;
  for (std::size_t u : inst.a_sorted())
    for (std::size_t v : inst.a_sorted())
      if (std::fabs(inst.distance(u, inst.image(v)) - dab) <= tol) out.push_back({u, v});
  return out;
}

std::vector<std::pair<PointId, PointId>> enumerate_proximal_pairs(const FiniteInstance& inst,
                                                                  double tol) {
  std::vector<std::pair<PointId, PointId>> out;
  for (const ProximalPair& p : proximal_pairs(inst, tol)) out.emplace_back(inst.id(p.u), inst.id(p.v));
  return out;
}

namespace {

struct Counters {
  std::size_t admissible = 0;
  std::size_t filtered = 0;
  std::vector<Violation> violations;
};

VerificationReport verify_impl(ContractionKind kind, const FiniteInstance& inst,
                               const ThetaSpec& theta, const PhiSpec& phi,
                               const ContractionParams& params, const VerifyOptions& options) {
  require_admissible(theta, phi);
  const double tol = inst.exact_int() ? 0.0 : options.tol;
  const auto pairs = proximal_pairs(inst, tol);

  // The points entering the inequality: (u, v) themselves or their images.
  struct Ends {
    std::size_t u, v;
  };
  std::vector<Ends> ends;
  ends.reserve(pairs.size());
  for (const ProximalPair& p : pairs) {
    if (kind == ContractionKind::first)
      ends.push_back({p.u, p.v});
    else
      ends.push_back({inst.image(p.u), inst.image(p.v)});
  }

  // Dense distances among the participating points.
  std::vector<std::size_t> local(inst.size(), inst.size());
  std::vector<std::size_t> members;
  for (const Ends& e : ends)
    for (std::size_t x : {e.u, e.v})
      if (local[x] == inst.size()) {
        local[x] = members.size();
        members.push_back(x);
      }
  const std::size_t m = members.size();
  std::vector<double> dist(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = inst.distance(members[i], members[j]);
  auto d = [&](std::size_t x, std::size_t y) { return dist[local[x] * m + local[y]]; };

  const double a = params.a(), b = params.b(), c = params.c(), h = params.h();
  const bool literal = options.filter == AdmissibilityFilter::literal;

  auto evaluate = [&](std::size_t begin, std::size_t end, Counters& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const Ends& p = ends[i];
      for (std::size_t j = 0; j < ends.size(); ++j) {
        const Ends& q = ends[j];
        const double lhs_arg = d(p.u, q.u);
        if (literal) {
          if (p.u == p.v) {
            ++out.filtered;
            continue;
          }
        } else if (lhs_arg <= tol) {
          ++out.filtered;
          continue;
        }
        ++out.admissible;

        const double lhs = lhs_arg <= tol ? 1.0 : eval_theta(theta, lhs_arg);
        const double rhs_arg =
            a * d(p.v, q.v) + b * d(p.u, p.v) + c * d(q.u, q.v) + h * (d(p.v, q.u) + d(q.v, p.u));
        bool rhs_defined = true;
        double rhs = 0.0;
        if (rhs_arg > tol) {
          rhs = eval_phi(phi, eval_theta(theta, rhs_arg));
        } else if (literal) {
          rhs = eval_phi(phi, 1.0);
        } else {
          rhs_defined = false;
        }
        if (!std::isfinite(lhs) || (rhs_defined && !std::isfinite(rhs)))
          throw NumericError("theta/phi overflow while evaluating the contraction inequality");
        if (!rhs_defined || lhs > rhs + tol) {
          out.violations.push_back({static_cast<std::uint32_t>(pairs[i].u), static_cast<std::uint32_t>(pairs[j].u),
                                    static_cast<std::uint32_t>(pairs[i].v), static_cast<std::uint32_t>(pairs[j].v),
                                    lhs, rhs_defined ? rhs : 0.0, rhs_defined});
        }
      }
    }
  };

  const unsigned workers = resolve_workers(options.workers);
  std::vector<Counters> partial(std::max<std::size_t>(1, std::min<std::size_t>(workers, pairs.size())));
  parallel_chunks(pairs.size(), workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    evaluate(begin, end, partial[chunk]);
  });

  VerificationReport report;
  report.kind = kind;
  report.filter = options.filter;
  report.proximal_pair_count = pairs.size();
  report.total_quadruples = pairs.size() * pairs.size();
  for (Counters& part : partial) {
    report.admissible_quadruple_count += part.admissible;
    report.filtered_count += part.filtered;
    report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end(), [&](const Violation& x, const Violation& y) {
    return std::make_tuple(inst.rank(x.u1), inst.rank(x.u2), inst.rank(x.v1), inst.rank(x.v2)) <
           std::make_tuple(inst.rank(y.u1), inst.rank(y.u2), inst.rank(y.v1), inst.rank(y.v2));
  });

  if (report.admissible_quadruple_count == 0)
    report.status = VerificationStatus::vacuous;
  else if (report.violations.empty())
    report.status = VerificationStatus::holds;
  else
    report.status = VerificationStatus::violated;
  return report;
}

}  // namespace

VerificationReport verify_first_kind(const FiniteInstance& inst, const ThetaSpec& theta,
                                     const PhiSpec& phi, const ContractionParams& params,
                                     const VerifyOptions& options) {
  return verify_impl(ContractionKind::first, inst, theta, phi, params, options);
}

VerificationReport verify_second_kind(const FiniteInstance& inst, const ThetaSpec& theta,
                                      const PhiSpec& phi, const ContractionParams& params,
                                      const VerifyOptions& options) {
  return verify_impl(ContractionKind::second, inst, theta, phi, params, options);
}

VerificationReport verify_contraction(ContractionKind kind, const FiniteInstance& inst,
                                      const ThetaSpec& theta, const PhiSpec& phi,
                                      const ContractionParams& params, const VerifyOptions& options) {
  return verify_impl(kind, inst, theta, phi, params, options);
}

}  // namespace proxpt
