#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace bikoid::app {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

struct EvalArgs {
  std::string bikoid;
  std::string rep = "object-regular";
  int n = 2;
  std::string word;
  std::vector<std::string> colors;
  std::string format = "json";  // json or triplet, for the operator export
  std::string export_path;
  long order_bound = 10000;
  Index dim_cap = kDefaultDimCap;
};

struct RelationsArgs {
  std::string bikoid;
  std::string rep = "object-regular";
  int n = 3;
  bool forbidden_reverse = false;
  Index dim_cap = kDefaultDimCap;
};

struct OracleArgs {
  std::string gr = "Z2-Z3";
  int trials = 200;
  int max_len = 8;
  std::uint64_t seed = 20240611;
  int max_n = 3;
};

// Each command writes a short human summary to `out`, fills `report` and
// returns the exit code.  Lookup and input errors propagate as exceptions;
// run_guarded turns them into exit code 2.
int cmd_verify(Catalog& cat, std::string const& target, std::ostream& out, nlohmann::json& report);
int cmd_eval(Catalog& cat, EvalArgs const& a, std::ostream& out, nlohmann::json& report);
int cmd_relations(Catalog& cat, RelationsArgs const& a, std::ostream& out, nlohmann::json& report);
int cmd_oracle(Catalog& cat, OracleArgs const& a, std::ostream& out, nlohmann::json& report);

template <class F>
int run_guarded(F&& f, std::ostream& err, nlohmann::json& report) {
  try {
    return f();
  } catch (ParseError const& e) {
    err << "error: " << e.what() << " at position " << e.position << "\n";
    report = {{"status", "error"}, {"error", e.what()}, {"position", e.position}};
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    report = {{"status", "error"}, {"error", e.what()}};
  }
  return kUsage;
}

}  // namespace bikoid::app
