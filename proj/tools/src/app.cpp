#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "frobgrow/cli/commands.hpp"
#include "frobgrow/errors.hpp"

namespace frobgrow::cli {
namespace {

struct Options {
  RunConfig config;
  std::optional<double> scale;
  std::optional<std::size_t> gb_pairs, minor_subsets, oracle_dim;
  std::optional<double> wall_seconds;
  std::string format = "json";
  bool no_timings = false;
};

void add_common(CLI::App* sub, Options& o) {
  auto& c = o.config;
  sub->add_option("--family", c.family, "Named family: katzman, ss5, ss7, brenner_monsky");
  sub->add_option("--ring-file", c.ring_file, "YAML ring definition");
  sub->add_option("--p", c.p, "Characteristic");
  sub->add_option("--e", c.e_range, "Exponent or range a..b (q = p^e)");
  sub->add_option("--q", c.q, "Explicit q (a power of p)");
  sub->add_option("--r", c.r, "Sequence data r0,r1,r2 in t");
  sub->add_option("--n", c.n, "Index n");
  sub->add_option("--h", c.h_source, "h source: minors, closed-form, or a polynomial in t");
  sub->add_option("--z", c.z, "Saturation element");
  sub->add_option("--panel", c.panel, "Random panel size");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--budget", o.scale, "Multiply every budget by this factor")->check(CLI::PositiveNumber);
  sub->add_option("--gb-pairs", o.gb_pairs, "S-pair budget")->check(CLI::PositiveNumber);
  sub->add_option("--minor-subsets", o.minor_subsets, "Minor enumeration budget")->check(CLI::PositiveNumber);
  sub->add_option("--oracle-dim", o.oracle_dim, "Bounded membership oracle budget")->check(CLI::PositiveNumber);
  sub->add_option("--wall-seconds", o.wall_seconds, "Wall-clock cap per computation")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("-o,--output", c.output, "Write the report to a file");
  sub->add_flag("--no-timings", o.no_timings, "Omit timings (byte-stable output)");
}

RunConfig finish(const Options& o) {
  RunConfig c = o.config;
  c.budget = Budget::from_environment();
  if (o.scale) c.budget = c.budget.scaled(*o.scale);
  if (o.gb_pairs) c.budget.gb_pairs = *o.gb_pairs;
  if (o.minor_subsets) c.budget.minor_subsets = *o.minor_subsets;
  if (o.oracle_dim) c.budget.oracle_dim = *o.oracle_dim;
  if (o.wall_seconds) c.budget.wall_seconds = *o.wall_seconds;
  c.format = o.format == "csv" ? OutputFormat::csv : o.format == "text" ? OutputFormat::text : OutputFormat::json;
  c.timings = !o.no_timings;
  return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frobgrow: Frobenius powers, h_q certificates and stable decompositions"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  add_common(&app, opts);
  const std::map<std::string, std::pair<std::string, std::function<CommandResult(const RunConfig&)>>> commands{
      {"pseq", {"Table of the recursive sequence P_n", cmd_pseq}},
      {"census", {"Irreducible-factor census over a range of q", cmd_census}},
      {"hq", {"h_q certificates from the minors of M_d", cmd_hq}},
      {"decompose", {"Stable decomposition of I^[q] with verification", cmd_decompose}},
      {"verify-lemmas", {"Membership and colon-stability suite", cmd_verify_lemmas}},
      {"saturate", {"Saturation exponents N_q", cmd_saturate}},
      {"witness", {"Witness colons for ss5 / ss7", cmd_witness}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    subs[name] = app.add_subcommand(name, entry.first);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    RunConfig config = finish(opts);
    validate(config);
    set_current_budget(config.budget);
    CommandResult res;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) res = commands.at(name).second(config);
    const std::string rendered = res.render(config.format);
    if (config.output) {
      std::ofstream f(*config.output);
      if (!f) throw InputError("cannot write '" + *config.output + "'");
      f << rendered;
    } else {
      out << rendered;
    }
    if (!res.message.empty()) err << (res.exit_code == kSuccess ? "note: " : "error: ") << res.message << "\n";
    return res.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace frobgrow::cli
