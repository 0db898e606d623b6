#include "proxpt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "proxpt/builtins.hpp"
#include "proxpt/errors.hpp"
#include "proxpt/instance_io.hpp"

namespace proxpt {

namespace {

constexpr double kThetaGrid[] = {0.1, 1.0, 2.0, 5.0};
constexpr std::size_t kThetaVanishingLength = 1'000'000;
constexpr double kPhiGrid[] = {1.5, 2.0, 10.0};
constexpr std::size_t kPhiDepth = 30;

struct Context {
  std::optional<FiniteInstance> inst;  // absent only for `functions` without an instance
  std::string source;
  ThetaSpec theta;
  PhiSpec phi;
  ContractionParams params;
  double tol;
  double eps_conv;
  std::size_t max_iter;  // 0: solver default
  PPropertyMode mode;
  AdmissibilityFilter filter;
};

// Text output only; the JSON report always carries the full sets.
std::string join(const std::vector<PointId>& ids, std::size_t limit = 24) {
  std::string out = "{";
  const std::size_t shown = std::min(ids.size(), limit);
  for (std::size_t i = 0; i < shown; ++i) out += (i ? ", " : "") + ids[i];
  if (shown < ids.size()) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out + "}";
}

const char* pass_fail(bool pass) { return pass ? "pass" : "FAIL"; }

Context resolve(Command command, const RunOptions& o) {
  InstanceConfig config;
  std::optional<FiniteInstance> inst;
  std::string source;

  if (command == Command::demo_paper) {
    if (o.instance_path || (o.builtin && *o.builtin != "triangular"))
      throw ParamError("demo-paper always runs on the triangular instance");
    const std::size_t n = o.size.value_or(default_builtin_size("triangular"));
    inst = triangular(n, o.exact_int);
    source = "builtin:triangular:" + std::to_string(n);
  } else if (o.instance_path && o.builtin) {
    throw ParamError("give either --instance or --builtin, not both");
  } else if (o.instance_path) {
    InstanceFile file = load_instance_file(*o.instance_path, o.exact_int);
    inst = std::move(file.instance);
    config = std::move(file.config);
    source = *o.instance_path;
  } else if (o.builtin) {
    const std::size_t n = o.size.value_or(default_builtin_size(*o.builtin));
    inst = generate_builtin(*o.builtin, n, o.exact_int);
    source = "builtin:" + *o.builtin + ":" + std::to_string(n);
  } else if (command != Command::functions) {
    throw ParamError("an instance is required: --instance <path> or --builtin <name>");
  } else {
    source = "none";
  }

  if (o.kind != "first" && o.kind != "second" && o.kind != "both")
    throw ParamError("--kind must be first|second|both");

  ThetaSpec theta = o.theta ? ThetaSpec::from_name(*o.theta) : config.theta.value_or(ThetaSpec::exp());
  PhiSpec phi = o.phi ? PhiSpec::from_string(*o.phi) : config.phi.value_or(PhiSpec::pow(0.5));
  ContractionParams params =
      o.params ? ContractionParams::parse(*o.params) : config.params.value_or(ContractionParams(1, 0, 0, 0));
  const double tol = o.tol.value_or(config.tol.value_or(kDefaultTol));
  const double eps = o.eps_conv.value_or(config.eps_conv.value_or(1e-10));
  if (!(tol >= 0.0) || !(eps >= 0.0)) throw ParamError("tolerances must be non-negative");
  const bool exact = inst && inst->exact_int();
  return Context{std::move(inst),
                 std::move(source),
                 std::move(theta),
                 std::move(phi),
                 params,
                 exact ? 0.0 : tol,
                 exact ? 0.0 : eps,
                 o.max_iter.value_or(config.max_iter.value_or(0)),
                 p_property_mode_from_string(o.p_property),
                 admissibility_filter_from_string(o.filter)};
}

struct Runner {
  const Context& ctx;
  const RunOptions& opts;
  Json report;
  std::ostringstream text;
  bool failed = false;

  ProximalProfile profile;
  std::optional<PPropertyResult> p_property;
  std::optional<RangeConditionResult> range;
  std::vector<VerificationReport> verifications;
  std::optional<BppResult> bpp;
  std::optional<UniquenessReport> uniqueness;

  void header(Command command) {
    report["format_version"] = kFormatVersion;
    report["command"] = to_string(command);
    if (!ctx.inst) {
      report["instance"] = skipped("no instance given");
      write_settings(0);
      for (const char* key : {"profile", "hypotheses", "verification", "solve", "uniqueness", "claims_vs_computed"})
        report[key] = skipped("not requested by this command");
      text << "proxpt " << to_string(command) << ": no instance\n";
      return;
    }
    const FiniteInstance& inst = *ctx.inst;
    report["instance"] = Json{{"source", ctx.source},
                              {"points", inst.size()},
                              {"metric", to_string(inst.metric().kind)},
                              {"A_size", inst.a().size()},
                              {"B_size", inst.b().size()},
                              {"exact_int", inst.exact_int()}};
    write_settings(inst.a().size());
    for (const char* key : {"profile", "hypotheses", "verification", "solve", "uniqueness", "claims_vs_computed"})
      report[key] = skipped("not requested by this command");

    text << "proxpt " << to_string(command) << ": " << ctx.source << " (" << inst.size() << " points, "
         << to_string(inst.metric().kind) << (inst.exact_int() ? ", exact-int" : "") << ", |A|=" << inst.a().size()
         << ", |B|=" << inst.b().size() << ")\n";
  }

  void write_settings(std::size_t a_size) {
    report["settings"] = Json{{"tol", report_number(ctx.tol)},
                              {"eps_conv", report_number(ctx.eps_conv)},
                              {"max_iter", ctx.max_iter == 0 ? 10 * a_size + 100 : ctx.max_iter},
                              {"theta", ctx.theta.name()},
                              {"phi", ctx.phi.name()},
                              {"phi_k", report_number(ctx.phi.exponent())},
                              {"params", Json::array({report_number(ctx.params.a()), report_number(ctx.params.b()),
                                                      report_number(ctx.params.c()), report_number(ctx.params.h())})},
                              {"p_property", to_string(ctx.mode)},
                              {"filter", to_string(ctx.filter)}};
  }

  void run_profile() {
    profile = proximal_subsets(*ctx.inst, ctx.tol);
    report["profile"] = to_json(profile);
    text << "d(A,B) = " << format_number(profile.dab) << "\n"
         << "A0 = " << join(profile.a0) << "\n"
         << "B0 = " << join(profile.b0) << "\n";
  }

  Json& hypotheses() {
    if (!report["hypotheses"].contains("metric_axioms")) {
      report["hypotheses"] = Json::object();
      for (const char* key : {"metric_axioms", "p_property", "approx_compact", "range_condition",
                              "theta_validation", "phi_validation"})
        report["hypotheses"][key] = skipped("not requested by this command");
    }
    return report["hypotheses"];
  }

  void run_structural() {
    Json& h = hypotheses();
    const MetricAxiomReport axioms = validate_metric_axioms(*ctx.inst, ctx.tol);
    h["metric_axioms"] = to_json(axioms);
    failed |= !axioms.pass();
    text << "metric axioms: " << pass_fail(axioms.pass()) << (axioms.analytic ? " (analytic metric)" : "") << "\n";

    p_property = check_p_property(*ctx.inst, profile, ctx.mode);
    h["p_property"] = to_json(*p_property);
    failed |= !p_property->pass;
    text << "P-property (" << to_string(ctx.mode) << "): " << pass_fail(p_property->pass);
    if (const auto& w = p_property->witness)
      text << "  witness x1=" << w->x1 << " x2=" << w->x2 << " y1=" << w->y1 << " y2=" << w->y2
           << " d(x1,x2)=" << format_number(w->dx) << " d(y1,y2)=" << format_number(w->dy);
    text << "\n";

    Json compact = Json::object();
    for (CompactnessDirection dir : {CompactnessDirection::b_wrt_a, CompactnessDirection::a_wrt_b}) {
      const CompactnessResult r = check_approx_compact(*ctx.inst, dir);
      compact[to_string(dir)] = to_json(r);
      text << "approximately compact (" << to_string(dir) << "): " << pass_fail(r.pass) << " (finite set)\n";
    }
    h["approx_compact"] = std::move(compact);

    range = check_range_condition(*ctx.inst, profile);
    h["range_condition"] = to_json(*range);
    failed |= !range->pass;
    text << "T(A0) in B0: " << pass_fail(range->pass);
    if (range->witness) text << "  witness T(" << *range->witness << ") = " << *range->witness_image;
    text << "\n";
  }

  void run_functions() {
    Json& h = hypotheses();
    std::vector<double> theta_grid(std::begin(kThetaGrid), std::end(kThetaGrid));
    std::size_t m = kThetaVanishingLength;
    if (!ctx.theta.is_builtin()) {
      theta_grid.clear();
      for (const auto& [t, v] : ctx.theta.knots()) theta_grid.push_back(t);
      m = static_cast<std::size_t>(std::min(1e6, 1.0 / ctx.theta.knots().front().first));
    }
    std::vector<double> phi_grid(std::begin(kPhiGrid), std::end(kPhiGrid));
    if (!ctx.phi.is_builtin()) {
      phi_grid.clear();
      for (const auto& [t, v] : ctx.phi.knots())
        if (t > 1.0) phi_grid.push_back(t);
    }
    const FunctionReport theta = validate_theta(ctx.theta, theta_grid, std::max<std::size_t>(m, 2));
    // pow(k) needs about log(0.01)/log(k) rounds before phi^n(t) - 1 is small
    std::size_t depth = kPhiDepth;
    if (ctx.phi.is_builtin())
      depth = std::max(depth, static_cast<std::size_t>(std::ceil(std::log(0.01) / std::log(ctx.phi.exponent()))));
    const FunctionReport phi = validate_phi(ctx.phi, phi_grid, depth);
    h["theta_validation"] = to_json(theta);
    h["phi_validation"] = to_json(phi);
    failed |= !theta.pass() || !phi.pass();
    for (const FunctionReport* r : {&theta, &phi}) {
      text << r->function << " validation: " << pass_fail(r->pass()) << "\n";
      for (const AxiomCheck& c : r->checks)
        text << "  " << c.axiom << ": " << pass_fail(c.pass) << "  " << c.detail << "\n";
    }
  }

  void run_verify() {
    std::vector<ContractionKind> kinds;
    if (opts.kind != "second") kinds.push_back(ContractionKind::first);
    if (opts.kind != "first") kinds.push_back(ContractionKind::second);
    Json list = Json::array();
    for (ContractionKind kind : kinds) {
      VerificationReport r = verify_contraction(kind, *ctx.inst, ctx.theta, ctx.phi, ctx.params,
                                                VerifyOptions{ctx.tol, ctx.filter, opts.workers});
      list.push_back(to_json(r, *ctx.inst, opts.max_violations));
      failed |= r.status == VerificationStatus::violated;
      text << "contraction (" << to_string(kind) << " kind): " << to_string(r.status) << ", "
           << r.admissible_quadruple_count << " admissible, " << r.filtered_count << " filtered, "
           << r.violations.size() << " violation(s)\n";
      if (!r.violations.empty()) {
        const Violation& v = r.violations.front();
        text << "  first violation: u1=" << ctx.inst->id(v.u1) << " u2=" << ctx.inst->id(v.u2)
             << " v1=" << ctx.inst->id(v.v1) << " v2=" << ctx.inst->id(v.v2) << " lhs=" << format_number(v.lhs)
             << " rhs=" << (v.rhs_defined ? format_number(v.rhs) : std::string("undefined")) << "\n";
      }
      verifications.push_back(std::move(r));
    }
    report["verification"] = std::move(list);
  }

  void run_solve() {
    const SolveOptions so{ctx.tol, ctx.eps_conv, ctx.max_iter};
    const PointId u0 = opts.u0.value_or(profile.a0.front());
    try {
      bpp = solve(*ctx.inst, u0, so);
      report["solve"] = to_json(*bpp);
      failed |= !bpp->certified;
      text << "solve from " << u0 << ": " << to_string(bpp->trace.status) << " to " << bpp->point << " in "
           << bpp->trace.steps() << " step(s), bpp_residual = " << format_number(bpp->bpp_residual) << "\n";
      text << "  iterates: ";
      for (std::size_t i = 0; i < bpp->trace.iterates.size(); ++i)
        text << (i ? " -> " : "") << bpp->trace.iterates[i];
      text << "\n";
      for (const std::string& w : bpp->warnings) text << "  warning: " << w << "\n";
    } catch (const InfeasibleStep& e) {
      report["solve"] = Json{{"start", u0}, {"error", e.what()}, {"trace", to_json(e.trace())}};
      failed = true;
      text << "solve from " << u0 << ": " << e.what() << "\n";
    } catch (const NonConvergence& e) {
      report["solve"] = Json{{"start", u0}, {"error", e.what()}, {"trace", to_json(e.trace())}};
      failed = true;
      text << "solve from " << u0 << ": " << e.what() << "\n";
    }

    uniqueness = uniqueness_check(*ctx.inst, so, opts.workers);
    report["uniqueness"] = to_json(*uniqueness);
    failed |= !uniqueness->unique;
    text << "uniqueness: " << (uniqueness->unique ? "unique" : "NOT unique") << ", limits = "
         << join(uniqueness->limits) << (uniqueness->unique_image ? " (unique image)" : "") << "\n";
  }

  // Claims made for the triangular example, side by side with what brute force finds.
  void run_claims() {
    const FiniteInstance& inst = *ctx.inst;
    std::vector<PointId> all_a, all_b;
    for (std::size_t i : inst.a_sorted()) all_a.push_back(inst.id(i));
    for (std::size_t i : inst.b_sorted()) all_b.push_back(inst.id(i));

    Json rows = Json::array();
    auto row = [&](const std::string& quantity, const std::string& claimed, const std::string& computed,
                   bool match, const std::string& note = {}) {
      Json r{{"quantity", quantity}, {"claimed", claimed}, {"computed", computed}, {"match", match}};
      if (!note.empty()) r["note"] = note;
      rows.push_back(std::move(r));
    };

    row("d(A,B)", "3", format_number(profile.dab), profile.dab == 3.0);
    row("A0", "A = " + join(all_a), join(profile.a0), profile.a0 == all_a,
        profile.a0 == all_a ? "" : "paper asserts A0=A; computed A0=" + join(profile.a0));
    row("B0", "B = " + join(all_b), join(profile.b0), profile.b0 == all_b,
        profile.b0 == all_b ? "" : "paper asserts B0=B; computed B0=" + join(profile.b0));
    row("P-property", "holds", p_property->pass ? "holds" : "fails", p_property->pass);
    row("T(A0) in B0", "holds", range->pass ? "holds" : "fails", range->pass);
    row("A approximately compact w.r.t. B", "holds", "holds (finite set)", true);
    for (const VerificationReport& v : verifications) {
      const bool second = v.kind == ContractionKind::second;
      const std::string status = to_string(v.status);
      if (second)
        row("second-kind contraction (exp, pow 1/2, a=1)", "holds", status, v.status != VerificationStatus::violated,
            v.status == VerificationStatus::vacuous ? "holds only vacuously: no admissible quadruple" : "");
      else
        row("first-kind contraction (exp, pow 1/2, a=1)", "not claimed", status, true,
            v.status == VerificationStatus::vacuous ? "vacuous: admissible_quadruple_count = 0" : "");
    }
    row("theta used in the example algebra", "theta(t) = e^t", "theta(t) = e^t", false,
        "the example's step 'e^{d(T..)} + 1 = theta(d(T..))' does not match theta(t) = e^t; "
        "the verifier evaluates theta(t) = e^t as declared");
    if (bpp) {
      row("best proximity point", "6 (lambda_3)", bpp->point, bpp->point == "6");
      const std::size_t p = inst.index_of(bpp->point);
      row("d(u*, T u*)", "3", format_number(inst.distance(p, inst.image(p))),
          inst.distance(p, inst.image(p)) == 3.0);
    }
    if (uniqueness) row("uniqueness", "unique", uniqueness->unique ? "unique" : "not unique", uniqueness->unique);
    report["claims_vs_computed"] = rows;

    text << "\nclaimed vs computed:\n";
    for (const Json& r : rows) {
      text << "  " << (r["match"].get<bool>() ? "  ok " : "DIFF ") << r["quantity"].get<std::string>()
           << ": claimed " << r["claimed"].get<std::string>() << ", computed " << r["computed"].get<std::string>()
           << "\n";
      if (r.contains("note")) text << "        note: " << r["note"].get<std::string>() << "\n";
    }
  }
};

}  // namespace

Command command_from_string(const std::string& name) {
  if (name == "analyze") return Command::analyze;
  if (name == "functions") return Command::functions;
  if (name == "verify") return Command::verify;
  if (name == "solve") return Command::solve;
  if (name == "demo-paper") return Command::demo_paper;
  throw ParamError("unknown command '" + name + "'");
}

const char* to_string(Command command) noexcept {
  switch (command) {
    case Command::analyze:
      return "analyze";
    case Command::functions:
      return "functions";
    case Command::verify:
      return "verify";
    case Command::solve:
      return "solve";
    case Command::demo_paper:
      return "demo-paper";
  }
  return "?";
}

RunResult run_command(Command command, const RunOptions& options) {
  RunResult result;
  try {
    const Context ctx = resolve(command, options);
    Runner run{ctx, options, Json::object(), {}, false, {}, {}, {}, {}, {}, {}};
    run.header(command);
    switch (command) {
      case Command::analyze:
        run.run_profile();
        run.run_structural();
        break;
      case Command::functions:
        run.run_functions();
        break;
      case Command::verify:
        run.run_profile();
        run.run_functions();
        run.run_verify();
        break;
      case Command::solve:
        run.run_profile();
        run.run_solve();
        break;
      case Command::demo_paper:
        run.run_profile();
        run.run_structural();
        run.run_functions();
        run.run_verify();
        run.run_solve();
        run.run_claims();
        break;
    }
    result.exit_code = run.failed ? kExitCheckFailed : kExitOk;
    run.report["exit_code"] = result.exit_code;
    result.report = std::move(run.report);
    result.text = run.text.str();
  } catch (const Error& e) {
    result.exit_code = kExitUsage;
    result.report = nullptr;
    result.text = std::string("error: ") + e.what() + "\n";
    return result;
  }

  if (options.report_path) {
    std::ofstream out(*options.report_path);
    if (!out) {
      result.text += "error: cannot write report '" + *options.report_path + "'\n";
      result.exit_code = kExitUsage;
      return result;
    }
    out << result.report.dump(2) << "\n";
  }
  return result;
}

}  // namespace proxpt
