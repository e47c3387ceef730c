#pragma once

#include <stdexcept>
#include <string>

namespace covlift {

enum class ErrorCode {
  // graph_core
  DuplicateVertex,
  LoopEdge,
  DuplicateEdge,
  UnknownEndpoint,
  Disconnected,
  UnknownVertex,
  NotBijective,
  NotAdjacencyPreserving,
  NotATree,
  InvalidCotreeArcs,
  BaseNotInGraph,
  InvalidWalk,
  // abelian
  OrderTooSmall,
  GroupTooLarge,
  SpecMismatch,
  IndexOutOfRange,
  // zn_linalg
  InvalidModulus,
  NotAUnit,
  DimensionMismatch,
  ModulusMismatch,
  NotInvertible,
  // voltage
  InconsistentOpposites,
  UnknownArc,
  NotTReduced,
  // lifting
  NotUnimodular,
  // oracle
  BudgetExceeded,
  // cli
  ParseError,
  OracleDisagreement,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covlift
