#ifndef DGDEF_ERRORS_HPP
#define DGDEF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dgdef {

// Malformed input data (bad JSON, unknown labels, dimension mismatches in files).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition does not hold; the operation refuses to run.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug, never a data problem.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

// One violated structural identity, e.g. a failing Leibniz pair.
struct Violation {
  std::string identity;  // "leibniz", "d_squared", "associativity", "unit", ...
  std::string detail;    // offending basis pair / element, human readable
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string identity, std::string detail) {
    violations.push_back({std::move(identity), std::move(detail)});
  }
  std::string summary() const {
    if (ok()) return "valid";
    std::string s;
    for (const auto& v : violations) {
      s += v.identity + ": " + v.detail + "\n";
    }
    return s;
  }
};

}  // namespace dgdef

#endif
