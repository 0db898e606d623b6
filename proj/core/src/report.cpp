#include "proxpt/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace proxpt {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, value);
  return buf;
}

Json report_number(double value) {
  if (!std::isfinite(value)) return format_number(value);
  if (value == 0.0) return 0.0;  // folds -0
  return std::strtod(format_number(value).c_str(), nullptr);
}

Json skipped(const std::string& reason) { return Json{{"skipped", true}, {"reason", reason}}; }

Json to_json(const MetricAxiomReport& r) {
  Json out{{"pass", r.pass()}, {"analytic", r.analytic}};
  Json axioms = Json::array();
  for (const AxiomResult& a : r.axioms) {
    Json j{{"axiom", a.axiom}, {"pass", a.pass}};
    if (!a.pass) {
      j["witness"] = a.witness;
      j["excess"] = report_number(a.excess);
    }
    axioms.push_back(std::move(j));
  }
  out["axioms"] = std::move(axioms);
  return out;
}

Json to_json(const ProximalProfile& p) {
  Json pairs = Json::array();
  for (const auto& [a, b] : p.attaining_pairs) pairs.push_back(Json::array({a, b}));
  return Json{{"dAB", report_number(p.dab)},
              {"attaining_pairs", std::move(pairs)},
              {"A0", p.a0},
              {"B0", p.b0},
              {"tol", report_number(p.tol)}};
}

Json to_json(const PPropertyResult& r) {
  Json out{{"mode", to_string(r.mode)}, {"pass", r.pass}, {"tuples_checked", r.tuples_checked}};
  if (r.witness) {
    const PPropertyWitness& w = *r.witness;
    out["witness"] = Json{{"x1", w.x1}, {"x2", w.x2}, {"y1", w.y1}, {"y2", w.y2},
                          {"d_x1_x2", report_number(w.dx)}, {"d_y1_y2", report_number(w.dy)}};
  }
  return out;
}

Json to_json(const CompactnessResult& r) {
  return Json{{"direction", to_string(r.direction)}, {"pass", r.pass}, {"note", r.note}};
}

Json to_json(const RangeConditionResult& r) {
  Json out{{"pass", r.pass}};
  if (r.witness) out["witness"] = Json{{"a", *r.witness}, {"T(a)", *r.witness_image}};
  return out;
}

Json to_json(const FunctionReport& r) {
  Json checks = Json::array();
  for (const AxiomCheck& c : r.checks) {
    Json j{{"axiom", c.axiom}, {"pass", c.pass}, {"margin", report_number(c.margin)}, {"detail", c.detail}};
    if (!c.witness.empty()) {
      Json w = Json::array();
      for (double v : c.witness) w.push_back(report_number(v));
      j["witness"] = std::move(w);
    }
    checks.push_back(std::move(j));
  }
  return Json{{"function", r.function}, {"pass", r.pass()}, {"checks", std::move(checks)}};
}

Json to_json(const VerificationReport& r, const FiniteInstance& inst, std::size_t max_violations) {
  Json out{{"kind", to_string(r.kind)},
           {"status", to_string(r.status)},
           {"filter", to_string(r.filter)},
           {"proximal_pair_count", r.proximal_pair_count},
           {"total_quadruples", r.total_quadruples},
           {"admissible_quadruple_count", r.admissible_quadruple_count},
           {"filtered_count", r.filtered_count},
           {"violation_count", r.violations.size()}};
  Json list = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < max_violations; ++i) {
    const Violation& v = r.violations[i];
    list.push_back(Json{{"u1", inst.id(v.u1)},
                        {"u2", inst.id(v.u2)},
                        {"v1", inst.id(v.v1)},
                        {"v2", inst.id(v.v2)},
                        {"lhs", report_number(v.lhs)},
                        {"rhs", v.rhs_defined ? report_number(v.rhs) : Json("undefined")}});
  }
  out["violations"] = std::move(list);
  out["violations_truncated"] = r.violations.size() > max_violations;
  return out;
}

Json to_json(const SolveTrace& t) {
  Json steps = Json::array(), prox = Json::array();
  for (double v : t.step_residuals) steps.push_back(report_number(v));
  for (double v : t.proximal_residuals) prox.push_back(report_number(v));
  Json out{{"status", to_string(t.status)},
           {"iterations", t.steps()},
           {"iterates", t.iterates},
           {"step_residuals", std::move(steps)},
           {"proximal_residuals", std::move(prox)}};
  if (!t.note.empty()) out["note"] = t.note;
  return out;
}

Json to_json(const BppResult& r) {
  return Json{{"point", r.point},
              {"bpp_residual", report_number(r.bpp_residual)},
              {"certified", r.certified},
              {"warnings", r.warnings},
              {"trace", to_json(r.trace)}};
}

Json to_json(const UniquenessReport& r) {
  Json starts = Json::array();
  for (const StartOutcome& s : r.starts) {
    Json j{{"start", s.start}, {"status", to_string(s.trace.status)}, {"iterations", s.trace.steps()}};
    if (s.limit) j["limit"] = *s.limit;
    if (!s.error.empty()) j["error"] = s.error;
    starts.push_back(std::move(j));
  }
  return Json{{"unique", r.unique},
              {"unique_image", r.unique_image},
              {"limits", r.limits},
              {"scan_hits", r.scan_hits},
              {"starts", std::move(starts)}};
}

}  // namespace proxpt
