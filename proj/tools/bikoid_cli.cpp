// Command-line front end: verify, eval, relations, oracle.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"

using namespace bikoid::app;

int main(int argc, char** argv) {
  CLI::App app{"Bikoid verification and welded braid evaluation"};
  app.require_subcommand(1);
  std::string catalog_dir, out_path;
  bool json_stdout = false;
  app.add_option("--catalog", catalog_dir, "Directory of JSON descriptors (default: $CATALOG_DIR)");
  app.add_option("--out", out_path, "Write the JSON report to this file");
  app.add_flag("--json", json_stdout, "Also print the JSON report");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Run the axiom suite for a named object");
  verify->add_option("target", target, "group:, gr:, xmod:, birack: or a bikoid name")->required();

  EvalArgs ea;
  std::string colors;
  auto* eval = app.add_subcommand("eval", "Evaluate a braid word on a tensor power");
  eval->add_option("--bikoid", ea.bikoid)->required();
  eval->add_option("--rep", ea.rep, "object-regular or right-regular");
  eval->add_option("--n", ea.n, "Number of strands")->check(CLI::Range(1, 64));
  eval->add_option("--word", ea.word, "e.g. \"S+1 V2 S-1\"");
  eval->add_option("--colors", colors, "Comma separated representation per strand");
  eval->add_option("--export", ea.export_path, "Write the operator to this file");
  eval->add_option("--format", ea.format, "Operator export format")->check(CLI::IsMember({"json", "triplet"}));
  eval->add_option("--order-bound", ea.order_bound)->check(CLI::PositiveNumber);
  eval->add_option("--dim-cap", ea.dim_cap)->check(CLI::PositiveNumber);

  RelationsArgs ra;
  auto* rel = app.add_subcommand("relations", "Check the welded braid relations");
  rel->add_option("--bikoid", ra.bikoid)->required();
  rel->add_option("--rep", ra.rep);
  rel->add_option("--n", ra.n)->check(CLI::Range(2, 64));
  rel->add_flag("--forbidden-reverse", ra.forbidden_reverse, "Also test S+1 S+2 V1 = V2 S+1 S+2");
  rel->add_option("--dim-cap", ra.dim_cap)->check(CLI::PositiveNumber);

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "Compare the birack action with the pi_1/pi_2 action");
  orc->add_option("--gr", oa.gr);
  orc->add_option("--trials", oa.trials)->check(CLI::NonNegativeNumber);
  orc->add_option("--max-len", oa.max_len)->check(CLI::NonNegativeNumber);
  orc->add_option("--seed", oa.seed);
  orc->add_option("--max-n", oa.max_n)->check(CLI::Range(2, 4));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  nlohmann::json report;
  Catalog cat;
  int rc = run_guarded(
      [&] {
        if (catalog_dir.empty())
          if (char const* env = std::getenv("CATALOG_DIR")) catalog_dir = env;
        if (!catalog_dir.empty()) cat.load_directory(catalog_dir);
        if (*verify) return cmd_verify(cat, target, std::cout, report);
        if (*eval) {
          std::stringstream ss(colors);
          for (std::string c; std::getline(ss, c, ',');)
            if (!c.empty()) ea.colors.push_back(c);
          return cmd_eval(cat, ea, std::cout, report);
        }
        if (*rel) return cmd_relations(cat, ra, std::cout, report);
        return cmd_oracle(cat, oa, std::cout, report);
      },
      std::cerr, report);
  if (json_stdout) std::cout << report.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    f << report.dump(2) << "\n";
  }
  return rc;
}
