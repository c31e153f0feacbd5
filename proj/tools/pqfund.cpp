// pqfund: fundamental groups of quotients of products of curves.
//
//   pqfund pi1 --job kummer.json
//   pqfund structure --job job.json --max-cosets 50000 --out report.json
//   pqfund selftest

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance/suite.hpp"
#include "pq/cli.hpp"

namespace {

using namespace pq::cli;

struct Flags {
  std::string job;
  std::string out;
  std::size_t max_cosets = 0;
  std::size_t tietze_steps = 0;
  std::size_t index_bound = 0;
  bool quiet = false;
  bool timing = false;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int run(const Flags& f, const std::set<std::string>* outputs) {
  std::string text;
  if (f.job.empty() || f.job == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(f.job);
    if (!in) {
      std::cerr << "cannot read " << f.job << "\n";
      return kExitUsage;
    }
    text = read_all(in);
  }

  JobSpec job;
  try {
    job = parse_job(text);
    if (f.max_cosets)
      job.budgets.max_cosets = f.max_cosets;
    if (f.tietze_steps)
      job.budgets.tietze_steps = f.tietze_steps;
    if (f.index_bound)
      job.budgets.index_bound = f.index_bound;
    if (outputs)
      job.outputs = *outputs;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error at " << e.what() << "\n";
    return kExitValidation;
  }

  RunResult result = run_job(job, f.timing);
  std::string text_out = dump(result.report);
  if (!f.out.empty()) {
    std::ofstream out(f.out);
    out << text_out;
  } else if (!f.quiet) {
    std::cout << text_out;
  }
  for (const auto& e : result.report["errors"])
    std::cerr << "error: " << e.get<std::string>() << "\n";
  for (const auto& e : result.report["overflow"])
    if (!f.quiet)
      std::cerr << "overflow: " << e.get<std::string>() << "\n";
  return result.exit_code;
}

int selftest(bool quiet) {
  auto results = acceptance::run_suite();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    if (!quiet)
      std::cout << acceptance::format_line(r) << "\n";
  }
  if (!quiet)
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pqfund: fundamental groups of quotients of products of curves"};
  app.require_subcommand(1);
  Flags flags;

  auto add_job_flags = [&](CLI::App* sub) {
    sub->add_option("--job", flags.job, "job file (JSON); stdin when omitted or '-'");
    sub->add_option("--max-cosets", flags.max_cosets, "coset budget for every enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tietze-steps", flags.tietze_steps, "Tietze move budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--index-bound", flags.index_bound, "largest quotient order tried by verify")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", flags.out, "write the report here instead of stdout");
    sub->add_flag("--quiet", flags.quiet, "no report on stdout");
    sub->add_flag("--timing", flags.timing, "add per-stage wall times to the report");
  };

  struct Mode {
    const char* name;
    const char* help;
    std::set<std::string> outputs;
  };
  const std::vector<Mode> modes{
      {"pi1", "presentation and abelianization of pi_1", {"pi1", "abelianization"}},
      {"structure", "extension structure 1 -> E -> pi_1 -> T -> 1", {"structure"}},
      {"verify", "search for a finite-index product-of-surface-groups subgroup", {"verify"}},
      {"freeness", "is the diagonal action free", {"freeness"}},
      {"enumerate-vectors", "all generating vectors for each action's signature", {"enumerate"}},
  };
  std::vector<std::pair<CLI::App*, const Mode*>> subs;
  for (const auto& m : modes) {
    auto* sub = app.add_subcommand(m.name, m.help);
    add_job_flags(sub);
    subs.emplace_back(sub, &m);
  }
  auto* run_all = app.add_subcommand("run", "every output listed in the job");
  add_job_flags(run_all);
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--quiet", flags.quiet, "exit status only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (self->parsed())
    return selftest(flags.quiet);
  if (run_all->parsed())
    return run(flags, nullptr);
  for (const auto& [sub, mode] : subs)
    if (sub->parsed())
      return run(flags, &mode->outputs);
  return kExitUsage;
}
