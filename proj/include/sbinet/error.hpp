#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbinet {

/// Every failure the pipeline can report. The CLI maps kinds to exit codes.
enum class ErrorKind {
  // annotated dataset files
  NoTableFound,
  NoPrelude,
  SyntaxError,
  UndeclaredPrefix,
  RaggedRow,
  UnterminatedQuote,
  UnboundEntity,
  MissingMandatoryBinding,
  AmbiguousBinding,
  BindingOutOfRange,
  // knowledge graph / network construction
  RoleConflict,
  UnresolvedNodeRef,
  DuplicateNodeId,
  NegativeWeight,
  InvalidCoordinate,
  // metrics
  EmptyEdgeSet,
  SingletonNetwork,
  InvalidPartition,
  PathMetricNotApplicable,
  UnsupportedCriterion,
  UnknownNode,
  Unreachable,
  NoFinitePairs,
  // dashboard model
  MissingResult,
  EmptyDashboard,
  UnknownObjectId,
  UnknownColumn,
  InvalidManifest,
  SchemaViolation,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Grammar error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line,
             std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Error tied to a CSV data row (1-based, header excluded).
class RowError : public Error {
 public:
  RowError(ErrorKind kind, const std::string& message, std::size_t row);

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace sbinet
