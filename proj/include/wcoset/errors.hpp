#pragma once

#include <stdexcept>
#include <string>

namespace wcoset {

enum class ErrorKind {
  InvalidFamilyRank,
  RankMismatch,
  NotDominant,
  NotLevelDominant,
  NonIntegralWeight,
  PoleLevel,
  CriticalLevel,
  NotAdmissible,
  ZeroNorm,
  OrderUnderflow,
  GridMismatch,
  NegativeMultiplicity,
  UnboundedDenominator,
  UnrecognizedExtremal,
  DimensionMismatch,
  BudgetExceeded,
  InvalidArgument,
  UnsupportedParams,
  Internal,
};

// All math-level failures are thrown eagerly as Error; the CLI maps
// InvalidArgument/BudgetExceeded/UnsupportedParams to usage exits and the rest
// to mathematical-failure exits.
struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidFamilyRank: return "InvalidFamilyRank";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotLevelDominant: return "NotLevelDominant";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::PoleLevel: return "PoleLevel";
    case ErrorKind::CriticalLevel: return "CriticalLevel";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::OrderUnderflow: return "OrderUnderflow";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::UnboundedDenominator: return "UnboundedDenominator";
    case ErrorKind::UnrecognizedExtremal: return "UnrecognizedExtremal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnsupportedParams: return "UnsupportedParams";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wcoset
