#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace roegen {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  SingularLocus,
  DegenerateCurve,
  StepTooLarge,
  StepRejected,
  SingularApproach,
  NoConvergence,
  DegenerateJacobian,
  EmptyFeasibleSet,
  DomainViolation,
  NonpositiveEntropy,
  EmptyDomainIntersection,
  UnknownTerm,
};

// Coarse grouping used by the command-line front end to pick an exit code.
enum class ErrorClass { Validation, Numerical, Domain };

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularLocus: return "SingularLocus";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::StepRejected: return "StepRejected";
    case ErrorKind::SingularApproach: return "SingularApproach";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DegenerateJacobian: return "DegenerateJacobian";
    case ErrorKind::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NonpositiveEntropy: return "NonpositiveEntropy";
    case ErrorKind::EmptyDomainIntersection: return "EmptyDomainIntersection";
    case ErrorKind::UnknownTerm: return "UnknownTerm";
  }
  return "Unknown";
}

constexpr ErrorClass classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularApproach:
    case ErrorKind::NoConvergence:
    case ErrorKind::DegenerateJacobian:
    case ErrorKind::EmptyFeasibleSet:
      return ErrorClass::Numerical;
    case ErrorKind::SingularLocus:
    case ErrorKind::DomainViolation:
    case ErrorKind::NonpositiveEntropy:
    case ErrorKind::EmptyDomainIntersection:
      return ErrorClass::Domain;
    default:
      return ErrorClass::Validation;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace roegen
