#pragma once

#include <string>
#include <string_view>

#include "sbinet/rdf.hpp"

namespace sbinet {

struct TurtleDocument {
  TripleSet triples;
  PrefixMap prefixes;
};

/// Parses the Turtle subset used by annotation preludes:
///
///   document   := ( '@prefix' PNAME_NS IRIREF '.' | statement )*
///   statement  := subject verb objects ( ';' ( verb objects )? )* '.'
///   subject    := IRIREF | PNAME
///   verb       := 'a' | IRIREF | PNAME
///   objects    := object ( ',' object )*
///   object     := IRIREF | PNAME | INTEGER | STRING
///
/// `#` starts a comment. Prefixed names expand by concatenating the declared
/// namespace with the local part. Anything outside the subset (blank nodes,
/// collections, decimals, language tags, datatypes, `@base`) is rejected with
/// a ParseError carrying line and column.
TurtleDocument parse_turtle_document(std::string_view text);

TripleSet parse_turtle_subset(std::string_view text);

/// Writes triples in the same subset using full IRIs only; parsing the
/// output yields the same set.
std::string serialize_turtle(const TripleSet& triples);

}  // namespace sbinet
