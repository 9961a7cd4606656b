// Command-line front end: linking numbers, twisted cohomology dimensions,
// jump-locus scans and deletion-restriction verification.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "jumploci/cli.hpp"

int main(int argc, char** argv) {
  using jumploci::Command;
  using jumploci::Format;

  CLI::App app{"Twisted cohomology and jump loci of plane curve germ complements"};
  app.require_subcommand(1);

  jumploci::JobSpec job;
  std::string format = "table";
  std::string corpus_name;
  std::string input_path;
  std::string inline_json;
  std::string character;
  std::int64_t order = 0;
  int degree = 1;
  std::size_t mult = 1;
  std::size_t budget = 0;

  const std::map<std::string, Command> commands{{"linking", Command::linking},
                                                {"dims", Command::dims},
                                                {"scan", Command::scan},
                                                {"verify-deletion", Command::verify_deletion},
                                                {"corpus", Command::corpus}};
  const std::map<std::string, const char*> help{
      {"linking", "Linking matrix from a braid and/or branch data"},
      {"dims", "dim H^0, H^1, H^2 at one torsion character"},
      {"scan", "Evaluate every character of order dividing N"},
      {"verify-deletion", "Check the deletion-restriction formulas against direct computation"},
      {"corpus", "List built-in germs or show one"}};

  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--corpus", corpus_name, "Built-in germ name");
    if (cmd != Command::corpus) {
      sub->add_option("--input", input_path, "JSON input file")->check(CLI::ExistingFile);
      sub->add_option("--inline", inline_json, "JSON input given inline");
    }
    if (cmd == Command::dims) sub->add_option("--char", character, "Exponents q_1,...,q_r, e.g. 0,1/3");
    if (cmd == Command::scan || cmd == Command::verify_deletion) {
      sub->add_option("--order", order, "Order bound N")->check(CLI::PositiveNumber);
      sub->add_option("--budget", budget, "Maximum number of evaluations")->check(CLI::PositiveNumber);
      sub->add_option("--jobs", job.jobs, "Worker threads (0: all cores)");
    }
    if (cmd == Command::dims || cmd == Command::scan) {
      sub->add_option("--degree", degree, "Cohomological degree i")->check(CLI::Range(0, 2));
    }
    if (cmd == Command::dims || cmd == Command::scan || cmd == Command::verify_deletion) {
      sub->add_option("--mult", mult, "Multiplicity k")->check(CLI::PositiveNumber);
    }
    if (cmd == Command::verify_deletion) sub->add_option("--delete", job.deleted, "Component(s) to delete, 1-based");
    sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output", job.output_path, "Write the report to this file");
    sub->callback([&, cmd = cmd, sub] {
      job.command = cmd;
      auto given = [sub](const char* flag) {
        const auto* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
      };
      if (given("--corpus")) job.corpus_name = corpus_name;
      if (given("--input")) job.input_path = input_path;
      if (given("--inline")) job.inline_json = inline_json;
      if (given("--char")) job.character = character;
      if (given("--order")) job.order = order;
      if (given("--degree")) job.degree = degree;
      if (given("--mult")) job.multiplicity = mult;
      if (given("--budget")) job.budget = budget;
      job.format = format == "json" ? Format::json : Format::table;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jumploci::kExitInvalid;
  }
  return jumploci::run(job, std::cout, std::cerr);
}
