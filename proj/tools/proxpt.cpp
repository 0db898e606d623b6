// proxpt: best proximity point analysis for finite metric-space instances.
//
//   proxpt analyze    --builtin quartic --size 3
//   proxpt verify     --instance fixture.json --kind first --params 1,0,0,0
//   proxpt solve      --builtin strip
//   proxpt demo-paper --size 10 --exact-int
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "proxpt/commands.hpp"

namespace {

void add_common(CLI::App* cmd, proxpt::RunOptions& o, bool instance_flags) {
  if (instance_flags) {
    cmd->add_option("--instance", o.instance_path, "Instance file (JSON)");
    cmd->add_option("--builtin", o.builtin, "Built-in instance: triangular|quartic|strip|chain");
  }
  cmd->add_option("--size", o.size, "Size parameter of the built-in instance");
  cmd->add_option("--kind", o.kind, "Contraction kind: first|second|both")->check(CLI::IsMember({"first", "second", "both"}));
  cmd->add_option("--theta", o.theta, "theta: exp|exp_sqrt");
  cmd->add_option("--phi", o.phi, "phi: pow or pow:<k>, 0 < k < 1");
  cmd->add_option("--params", o.params, "Contraction coefficients a,b,c,h");
  cmd->add_option("--tol", o.tol, "Absolute tolerance for equalities against d(A,B)");
  cmd->add_option("--eps-conv", o.eps_conv, "Convergence threshold on d(u_n, u_n+1)");
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap (default 10|A|+100)");
  cmd->add_option("--p-property", o.p_property, "P-property mode: strict|weak")->check(CLI::IsMember({"strict", "weak"}));
  cmd->add_option("--filter", o.filter, "Quadruple filter: positive_distance|literal")
      ->check(CLI::IsMember({"positive_distance", "literal"}));
  cmd->add_option("--u0", o.u0, "Start point for solve (default: first point of A0)");
  cmd->add_option("--report", o.report_path, "Write the machine-readable report to this path");
  cmd->add_option("--max-violations", o.max_violations, "Violations listed per contraction report");
  cmd->add_option("--workers", o.workers, "Worker threads (default: $PROXPT_WORKERS or all cores)");
  cmd->add_flag("--exact-int", o.exact_int, "Exact integer arithmetic for the absolute metric");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best proximity points of proximal contractions on finite metric spaces"};
  app.require_subcommand(1);

  proxpt::RunOptions options;
  struct Entry {
    const char* name;
    const char* help;
    proxpt::Command command;
  };
  const Entry entries[] = {
      {"analyze", "d(A,B), A0/B0 and the structural hypotheses", proxpt::Command::analyze},
      {"functions", "Numerical admissibility evidence for theta and phi", proxpt::Command::functions},
      {"verify", "Brute-force check of the proximal contraction inequalities", proxpt::Command::verify},
      {"solve", "Proximal iteration plus uniqueness certification", proxpt::Command::solve},
      {"demo-paper", "Triangular-number example: claimed vs computed", proxpt::Command::demo_paper},
  };
  std::optional<proxpt::Command> selected;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, options, e.command != proxpt::Command::demo_paper);
    sub->callback([&selected, cmd = e.command] { selected = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return proxpt::kExitUsage;
  }

  const proxpt::RunResult result = proxpt::run_command(*selected, options);
  (result.exit_code == proxpt::kExitUsage ? std::cerr : std::cout) << result.text;
  return result.exit_code;
}
