#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "bikoid/bikoid_all.hpp"

namespace bikoid::app {

std::string scalar_text(Scalar const& s);

// [{"r": i, "c": j, "v": "p/q"}, ...]
nlohmann::json operator_json(LinearOperator const& m);

// "rows cols nnz" header, then one "r c v" line per entry.
void write_triplets(std::ostream& os, LinearOperator const& m);

LinearOperator read_triplets(std::istream& is);

nlohmann::json report_json(NamedReport const& r);
nlohmann::json suite_json(std::vector<NamedReport> const& s);
nlohmann::json relation_json(RelationResult const& r);

}  // namespace bikoid::app
