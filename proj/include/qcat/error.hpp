#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcat {

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  SizeLimitExceeded,
  NotCommutative,
  NotAssociative,
  UnitFails,
  NotJoinDistributive,
  UnknownBuiltin,
  ValidationFailed,
  DimensionMismatch,
  QuantaleMismatch,
  NotReflexive,
  NotTransitive,
  NotAFunctor,
  NotADistributor,
  InternalLawViolation,
  UnitNotJoinIrreducible,
  NotCompactSeparated,
  NotLeftAdjoint,
  HypothesesUnmet,
  InvalidArgument,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `witness` holds the offending indices
/// (elements, objects or ultrafilter positions, depending on the raising call).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

/// Verdict of a law checker. On failure `witness` is the violating tuple and
/// `lhs`/`rhs` are the rendered values of both sides of the violated law.
struct CheckReport {
  std::string law;
  bool ok = true;
  std::vector<int> witness;
  std::string lhs;
  std::string rhs;
  std::string detail;

  static CheckReport pass(std::string law, std::string detail = {});
  static CheckReport fail(std::string law, std::vector<int> witness, std::string lhs,
                          std::string rhs, std::string detail = {});

  explicit operator bool() const noexcept { return ok; }
};

/// Enumeration guard shared by every exhaustive decider. Honors the
/// QCAT_MAX_ENUM environment variable; defaults to 10^6.
std::size_t max_enumeration();

/// Throws SizeLimitExceeded when `count` exceeds max_enumeration().
void require_enumerable(double count, const std::string& what);

}  // namespace qcat
