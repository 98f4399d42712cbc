#pragma once

#include <stdexcept>
#include <string>

namespace tra {

enum class ErrorKind {
  InvalidParameter,
  DomainError,
  InvalidBasis,
  LimitUndefined,
  SingularKineticBalance,
  IntegrationError,
  NotReducible,
  NotTridiagonalizable,
  LinearityCheckFailed,
  SingularPrefactor,
  RecursionBreakdown,
  ConvergenceFailure,
  NoRoot,
  InvalidBoundState,
  MissingSpectrum,
  SeriesDivergence,
  SingularCoupling,
  ZeroField,
  GridError,
  ResolutionError,
  InvalidProfile,
  UnknownEntry,
  MissingParameter,
  ParseError,
  IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::LimitUndefined: return "LimitUndefined";
    case ErrorKind::SingularKineticBalance: return "SingularKineticBalance";
    case ErrorKind::IntegrationError: return "IntegrationError";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::NotTridiagonalizable: return "NotTridiagonalizable";
    case ErrorKind::LinearityCheckFailed: return "LinearityCheckFailed";
    case ErrorKind::SingularPrefactor: return "SingularPrefactor";
    case ErrorKind::RecursionBreakdown: return "RecursionBreakdown";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::InvalidBoundState: return "InvalidBoundState";
    case ErrorKind::MissingSpectrum: return "MissingSpectrum";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::SingularCoupling: return "SingularCoupling";
    case ErrorKind::ZeroField: return "ZeroField";
    case ErrorKind::GridError: return "GridError";
    case ErrorKind::ResolutionError: return "ResolutionError";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace tra
