#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mindist/errors.hpp"
#include "mindist/io.hpp"

namespace {

struct Options {
  std::string input;
  std::string order;
  int d = 0;
  int max_d = 0;
  long long budget = 0;
  bool no_prune = false;
  bool assert_unmixed = false;
  bool json = false;
  std::string engine = "fast";
  bool serial = false;
  std::vector<int> degrees;
};

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "machine-readable output with provenance");
}

void add_input_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "problem document (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--order", o.order, "monomial order override")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  cmd->add_flag("--assert-unmixed", o.assert_unmixed,
                "assert that every associated prime has the same height");
  add_output_flags(cmd, o);
}

void add_scan_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget,
                  "candidate cap per degree (default 2^24)");
  cmd->add_flag("--no-prune", o.no_prune,
                "evaluate candidates whose leading monomial is regular");
  cmd->add_option("--engine", o.engine, "scan engine (default fast)")
      ->check(CLI::IsMember({"fast", "reference"}));
  cmd->add_flag("--serial", o.serial, "disable the parallel scan");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact minimum-distance, footprint, and Vasconcelos functions of graded "
      "ideals over prime fields"};
  app.require_subcommand(1);
  Options o;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_input_flags(gb, o);
  auto* initial = app.add_subcommand("initial", "initial ideal");
  add_input_flags(initial, o);
  auto* hilbert = app.add_subcommand(
      "hilbert", "degree, dimension, a-invariant, regularity index");
  add_input_flags(hilbert, o);

  for (const char* name : {"fp", "delta", "vasconcelos"}) {
    const char* about = name[0] == 'f'   ? "footprint function"
                        : name[0] == 'd' ? "minimum distance function"
                                         : "Vasconcelos function";
    auto* cmd = app.add_subcommand(name, about);
    add_input_flags(cmd, o);
    add_scan_flags(cmd, o);
    cmd->add_option("-d", o.d, "single degree");
    cmd->add_option("--max-d", o.max_d, "degrees 1..N");
  }

  auto* table = app.add_subcommand(
      "table", "d | H | delta | fp | vasconcelos for d = 1..max-d");
  add_input_flags(table, o);
  add_scan_flags(table, o);
  table->add_option("--max-d", o.max_d, "degrees 1..N (default 3)");

  auto* edge = app.add_subcommand(
      "edge-ideal", "edge ideal, covers, unmixedness, induced matching");
  add_input_flags(edge, o);

  auto* witness = app.add_subcommand(
      "witness", "Cohen-Macaulay bipartite labeling and witness monomial");
  add_input_flags(witness, o);
  add_scan_flags(witness, o);

  auto* ci = app.add_subcommand(
      "ci", "closed formulas for a complete intersection; no input document");
  ci->add_option("--degrees", o.degrees, "generator degrees, e.g. 2,3")
      ->required()
      ->delimiter(',');
  ci->add_option("-d", o.d, "single degree");
  ci->add_option("--max-d", o.max_d, "degrees 1..N");
  add_output_flags(ci, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? mindist::exit_ok : mindist::exit_input;
  }

  CLI::App* cmd = app.get_subcommands().front();
  std::string name = cmd->get_name();
  auto given = [cmd](const std::string& flag) {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };

  try {
    mindist::RunFlags flags;
    if (given("-d")) flags.d = o.d;
    if (given("--max-d")) flags.max_d = o.max_d;
    if (given("--budget")) flags.budget = o.budget;
    flags.no_prune = o.no_prune;
    flags.path = o.engine == "reference" ? mindist::EnginePath::reference
                                         : mindist::EnginePath::fast;
    flags.parallel = !o.serial;

    mindist::Report report;
    if (name == "ci") {
      report = mindist::run_ci(o.degrees, flags);
    } else {
      std::ifstream in(o.input);
      if (!in) {
        throw mindist::InputError("cannot open input file \"" + o.input + "\"");
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      mindist::ProblemSpec spec = mindist::parse_spec(buffer.str());
      if (!o.order.empty()) spec.order = o.order;
      if (o.assert_unmixed) spec.asserted.unmixed = true;
      mindist::Problem problem = mindist::materialize(spec);
      report = mindist::run_command(name, problem, flags);
    }
    if (o.json) {
      std::cout << report.data.dump(2) << "\n";
    } else {
      std::cout << report.text;
    }
    return mindist::exit_ok;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mindist::exit_code_for(e);
  }
}
