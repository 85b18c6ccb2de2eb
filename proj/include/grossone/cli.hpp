#ifndef GROSSONE_CLI_HPP
#define GROSSONE_CLI_HPP

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grossone/session.hpp"

namespace grossone {

/// Command-line entry point. `args` excludes the program name.
///
///   grossone [--div-truncate N] [--format exact|decimal:D] [--depth-cap N] <command>
///     eval EXPR
///     sum --summand EXPR [--var i] --upper COUNT [--alternating]
///     prob --total K --favorable M
///     repl [--script FILE]
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact arithmetic with finite, infinite and infinitesimal numbers"};
  app.name("grossone");
  app.require_subcommand(1);

  std::size_t div_truncate = 0;
  std::string format = "exact";
  std::size_t depth_cap = kDefaultDepthCap;
  app.add_option("--div-truncate", div_truncate,
                 "allow inexact '/' by keeping N quotient terms")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format: exact or decimal:D");
  app.add_option("--depth-cap", depth_cap, "maximum nesting of exponent braces")
      ->check(CLI::PositiveNumber);

  std::string expr;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
  eval_cmd->add_option("expr", expr, "expression")->required();

  std::string summand, var = "i", upper;
  bool alternating = false;
  auto* sum_cmd = app.add_subcommand("sum", "closed-form sum of a polynomial summand");
  sum_cmd->add_option("--summand", summand, "summand, polynomial in the index")->required();
  sum_cmd->add_option("--var", var, "index variable (default i)");
  sum_cmd->add_option("--upper", upper, "number of items")->required();
  sum_cmd->add_flag("--alternating", alternating, "alternate signs: +p(1) - p(2) + ...");

  std::string total, favorable;
  auto* prob_cmd = app.add_subcommand("prob", "probability of an event with m of K outcomes");
  prob_cmd->add_option("--total", total, "number K of elementary events")->required();
  prob_cmd->add_option("--favorable", favorable, "number m of favorable events")->required();

  std::string script;
  auto* repl_cmd = app.add_subcommand("repl", "interactive session");
  repl_cmd->add_option("--script", script, "run statements from FILE");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SessionConfig config;
  if (div_truncate > 0) config.div_truncate = div_truncate;
  config.depth_cap = depth_cap;
  auto mode = parse_print_mode(format);
  if (!mode) {
    err << "error: --format must be 'exact' or 'decimal:D' with D >= 1\n";
    return kExitUsage;
  }
  config.print_mode = *mode;

  if (*eval_cmd) return cmd_eval(expr, config, out, err);
  if (*sum_cmd) return cmd_sum(summand, var, upper, alternating, config, out, err);
  if (*prob_cmd) return cmd_prob(total, favorable, config, out, err);
  if (!script.empty()) {
    std::ifstream file(script);
    if (!file) {
      err << "error: cannot open " << script << "\n";
      return kExitUsage;
    }
    return repl(file, out, err, config, false, script);
  }
  return repl(in, out, err, config, &in == &std::cin && ::isatty(STDIN_FILENO));
}

}  // namespace grossone

#endif  // GROSSONE_CLI_HPP
