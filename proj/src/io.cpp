#include "io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace bikoid::app {

using nlohmann::json;

std::string scalar_text(Scalar const& s) {
  std::ostringstream os;
  os << numerator(s);
  if (denominator(s) != 1) os << "/" << denominator(s);
  return os.str();
}

json operator_json(LinearOperator const& m) {
  json entries = json::array();
  for (auto const& [r, c, v] : m.entries()) entries.push_back({{"r", r}, {"c", c}, {"v", scalar_text(v)}});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

void write_triplets(std::ostream& os, LinearOperator const& m) {
  os << m.rows() << " " << m.cols() << " " << m.nonzeros() << "\n";
  for (auto const& [r, c, v] : m.entries()) os << r << " " << c << " " << scalar_text(v) << "\n";
}

LinearOperator read_triplets(std::istream& is) {
  Index rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
    throw PreconditionError("triplet header must be 'rows cols nnz'");
  LinearOperator m(rows, cols);
  for (Index k = 0; k < nnz; ++k) {
    Index r, c;
    std::string v;
    if (!(is >> r >> c >> v)) throw PreconditionError("truncated triplet file");
    m.add(r, c, Scalar(v));
  }
  return m;
}

json report_json(NamedReport const& r) {
  json j{{"check", r.name}, {"status", r.report ? "pass" : "fail"}, {"required", r.required}};
  if (!r.report) {
    j["violated"] = r.report.check;
    j["witness"] = r.report.witness;
    if (!r.report.detail.empty()) j["detail"] = r.report.detail;
  }
  return j;
}

json suite_json(std::vector<NamedReport> const& s) {
  json a = json::array();
  for (auto const& r : s) a.push_back(report_json(r));
  return a;
}

json relation_json(RelationResult const& r) {
  return {{"relation", r.relation},
          {"n", r.n},
          {"status", r.pass ? "pass" : "fail"},
          {"required", r.required},
          {"witness", r.witness}};
}

}  // namespace bikoid::app
