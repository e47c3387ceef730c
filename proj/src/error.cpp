#include "covlift/error.hpp"

namespace covlift {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotAdjacencyPreserving: return "NotAdjacencyPreserving";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::InvalidCotreeArcs: return "InvalidCotreeArcs";
    case ErrorCode::BaseNotInGraph: return "BaseNotInGraph";
    case ErrorCode::InvalidWalk: return "InvalidWalk";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InconsistentOpposites: return "InconsistentOpposites";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::NotTReduced: return "NotTReduced";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace covlift
