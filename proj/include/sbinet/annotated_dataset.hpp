#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbinet/csv.hpp"
#include "sbinet/rdf.hpp"

namespace sbinet {

/// The two halves of an annotated file. Both views alias the input and
/// `prelude + table` reproduces it byte for byte.
struct SplitFile {
  std::string_view prelude;
  std::string_view table;
};

/// The table starts at the first line whose first non-blank character is a
/// double quote, or at the first non-blank line after a blank separator
/// line (for unquoted headers). Throws NoTableFound when no such line
/// exists and NoPrelude when the leading block holds no annotations.
SplitFile split_prelude(std::string_view text);

enum class DatasetRole { NodeSet, EdgeSet };

std::string_view to_string(DatasetRole role);

/// Semantic role of a bound column, reached from the data record.
enum class BindingRole {
  Id,         // graph:hasId
  Latitude,   // geo:lat
  Longitude,  // geo:long
  Label,      // rdfs:label
  Source,     // graph:hasSourceNode
  Target,     // graph:hasTargetNode
  User,       // qoe-m:has_*_User
  Weight,     // graph:hasWeight
  EdgeId,     // ccsv:atColumn on the edge record itself
};

std::string_view to_string(BindingRole role);

struct ColumnBinding {
  Term entity;          // the annotated entity, e.g. <lat>
  std::string predicate;  // property that links the record to it
  std::size_t column = 0;

  bool operator==(const ColumnBinding&) const = default;
};

struct ColumnBindingMap {
  DatasetRole dataset_role = DatasetRole::NodeSet;
  std::map<BindingRole, ColumnBinding> roles;
  /// Entities with a column reached through unrecognized properties.
  std::vector<ColumnBinding> extra;

  bool has(BindingRole role) const { return roles.contains(role); }
  std::optional<std::size_t> column(BindingRole role) const;
};

/// Resolves the column of every entity reachable from the data record.
/// id (node sets) and source/target (edge sets) are mandatory.
ColumnBindingMap extract_bindings(const TripleSet& triples);

struct AnnotatedDataset {
  std::string name;  // file name, for diagnostics
  TripleSet triples;
  PrefixMap prefixes;
  DataTable table;
  ColumnBindingMap bindings;
  DatasetRole role = DatasetRole::NodeSet;
  std::string graph_id;                  // object of isNodeSetFor / isEdgeSetFor
  std::set<std::string> record_classes;  // rdf:type of the data record
};

AnnotatedDataset parse_annotated_dataset(std::string_view text, std::string name);

/// Reads a file as UTF-8 and parses it. Throws IoError when unreadable.
AnnotatedDataset load_annotated_dataset(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sbinet
