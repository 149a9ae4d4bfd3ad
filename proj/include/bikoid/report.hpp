#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bikoid {

// Thrown when tables have inconsistent shapes or indices out of range.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation is called on input that was not verified.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompositionError : std::runtime_error {
  int strand;
  CompositionError(std::string const& what, int s)
      : std::runtime_error(what), strand(s) {}
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string const& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Outcome of an exhaustive check.  On failure `check` names the violated
// condition and `witness` holds the offending indices.
struct Report {
  bool ok = true;
  std::string check;
  std::vector<long> witness;
  std::string detail;

  static Report pass() { return {}; }
  static Report fail(std::string check, std::vector<long> witness = {},
                     std::string detail = {}) {
    Report r;
    r.ok = false;
    r.check = std::move(check);
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }
  explicit operator bool() const { return ok; }

  std::string str() const {
    if (ok) return "pass";
    std::ostringstream os;
    os << "fail [" << check << "]";
    if (!witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i];
      os << ")";
    }
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

inline void require(bool cond, std::string const& msg) {
  if (!cond) throw StructuralError(msg);
}

}  // namespace bikoid
