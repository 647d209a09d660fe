#include "sbinet/error.hpp"

namespace sbinet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoTableFound: return "NoTableFound";
    case ErrorKind::NoPrelude: return "NoPrelude";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredPrefix: return "UndeclaredPrefix";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::UnterminatedQuote: return "UnterminatedQuote";
    case ErrorKind::UnboundEntity: return "UnboundEntity";
    case ErrorKind::MissingMandatoryBinding: return "MissingMandatoryBinding";
    case ErrorKind::AmbiguousBinding: return "AmbiguousBinding";
    case ErrorKind::BindingOutOfRange: return "BindingOutOfRange";
    case ErrorKind::RoleConflict: return "RoleConflict";
    case ErrorKind::UnresolvedNodeRef: return "UnresolvedNodeRef";
    case ErrorKind::DuplicateNodeId: return "DuplicateNodeId";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::SingletonNetwork: return "SingletonNetwork";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::PathMetricNotApplicable: return "PathMetricNotApplicable";
    case ErrorKind::UnsupportedCriterion: return "UnsupportedCriterion";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::NoFinitePairs: return "NoFinitePairs";
    case ErrorKind::MissingResult: return "MissingResult";
    case ErrorKind::EmptyDashboard: return "EmptyDashboard";
    case ErrorKind::UnknownObjectId: return "UnknownObjectId";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
    case ErrorKind::InvalidManifest: return "InvalidManifest";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(kind, message + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

RowError::RowError(ErrorKind kind, const std::string& message, std::size_t row)
    : Error(kind, message + " (data row " + std::to_string(row) + ")"), row_(row) {}

}  // namespace sbinet
