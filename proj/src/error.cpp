#include "qcat/error.hpp"

#include <cstdlib>
#include <string>

namespace qcat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::UnitFails: return "UnitFails";
    case ErrorKind::NotJoinDistributive: return "NotJoinDistributive";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::QuantaleMismatch: return "QuantaleMismatch";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotADistributor: return "NotADistributor";
    case ErrorKind::InternalLawViolation: return "InternalLawViolation";
    case ErrorKind::UnitNotJoinIrreducible: return "UnitNotJoinIrreducible";
    case ErrorKind::NotCompactSeparated: return "NotCompactSeparated";
    case ErrorKind::NotLeftAdjoint: return "NotLeftAdjoint";
    case ErrorKind::HypothesesUnmet: return "HypothesesUnmet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

CheckReport CheckReport::pass(std::string law, std::string detail) {
  CheckReport r;
  r.law = std::move(law);
  r.detail = std::move(detail);
  return r;
}

CheckReport CheckReport::fail(std::string law, std::vector<int> witness, std::string lhs,
                              std::string rhs, std::string detail) {
  CheckReport r;
  r.law = std::move(law);
  r.ok = false;
  r.witness = std::move(witness);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.detail = std::move(detail);
  return r;
}

std::size_t max_enumeration() {
  if (const char* env = std::getenv("QCAT_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

void require_enumerable(double count, const std::string& what) {
  if (count > static_cast<double>(max_enumeration())) {
    throw Error(ErrorKind::SizeLimitExceeded,
                what + " needs " + std::to_string(static_cast<long double>(count)) +
                    " candidates, bound is " + std::to_string(max_enumeration()));
  }
}

}  // namespace qcat
