#ifndef ICOSOLVE_ERROR_HPP
#define ICOSOLVE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace icosolve {

enum class ErrorKind {
  InvalidArgument,
  NonFinite,
  ParseError,
  RangeError,
  DegenerateReduction,
  DegenerateCoefficients,
  LiftAmbiguity,
  LiftCollision,
  VertexSingularity,
  SeriesDivergence,
  UnreachableRegion,
  PoleError,
  NearSingularJ,
  BranchInconsistency,
  DenominatorCollapse,
  BranchSelectionFailed,
  NoConvergence,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::DegenerateReduction: return "DegenerateReduction";
    case ErrorKind::DegenerateCoefficients: return "DegenerateCoefficients";
    case ErrorKind::LiftAmbiguity: return "LiftAmbiguity";
    case ErrorKind::LiftCollision: return "LiftCollision";
    case ErrorKind::VertexSingularity: return "VertexSingularity";
    case ErrorKind::SeriesDivergence: return "SeriesDivergence";
    case ErrorKind::UnreachableRegion: return "UnreachableRegion";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NearSingularJ: return "NearSingularJ";
    case ErrorKind::BranchInconsistency: return "BranchInconsistency";
    case ErrorKind::DenominatorCollapse: return "DenominatorCollapse";
    case ErrorKind::BranchSelectionFailed: return "BranchSelectionFailed";
    case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable part; what() carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed complex literal. column is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError, "column " + std::to_string(column) + ": " + message),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace icosolve

#endif  // ICOSOLVE_ERROR_HPP
