#include "sbinet/annotated_dataset.hpp"

#include <fstream>
#include <sstream>

#include "sbinet/error.hpp"
#include "sbinet/turtle.hpp"

namespace sbinet {

namespace {

std::string_view trim_left(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\n')) ++i;
  return line.substr(i);
}

bool is_blank_line(std::string_view line) { return trim_left(line).empty(); }

// True when the block has anything besides whitespace and comments.
bool has_annotations(std::string_view block) {
  std::size_t pos = 0;
  while (pos < block.size()) {
    std::size_t end = block.find('\n', pos);
    if (end == std::string_view::npos) end = block.size();
    auto line = trim_left(block.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') return true;
    pos = end + 1;
  }
  return false;
}

std::vector<Term> objects_of(const TripleSet& triples, const Term& subject,
                             const std::string& predicate) {
  std::vector<Term> out;
  for (auto it = triples.lower_bound(Triple{subject, Term{}, Term{}});
       it != triples.end() && it->subject == subject; ++it) {
    if (it->predicate.is_iri() && it->predicate.value == predicate) out.push_back(it->object);
  }
  return out;
}

std::vector<Term> subjects_typed(const TripleSet& triples, const std::string& cls) {
  std::vector<Term> out;
  for (const auto& t : triples) {
    if (t.predicate.value == vocab::kRdfType && t.object.is_iri() && t.object.value == cls) {
      out.push_back(t.subject);
    }
  }
  return out;
}

std::optional<std::size_t> at_column(const TripleSet& triples, const Term& entity) {
  auto cols = objects_of(triples, entity, vocab::kAtColumn);
  if (cols.empty()) return std::nullopt;
  if (cols.size() > 1) {
    throw Error(ErrorKind::AmbiguousBinding, entity.to_string() + " has more than one ccsv:atColumn");
  }
  auto value = cols.front().as_integer();
  if (!value || *value < 0) {
    throw Error(ErrorKind::AmbiguousBinding,
                entity.to_string() + " ccsv:atColumn must be a non-negative integer");
  }
  return static_cast<std::size_t>(*value);
}

bool is_user_predicate(const std::string& iri) {
  return iri.starts_with(vocab::kQoeM) && iri.ends_with("_User");
}

struct DatasetHeader {
  Term dataset;
  DatasetRole role;
};

DatasetHeader find_dataset(const TripleSet& triples) {
  auto node_sets = subjects_typed(triples, vocab::kNodeSet);
  auto edge_sets = subjects_typed(triples, vocab::kEdgeSet);
  if (node_sets.size() + edge_sets.size() != 1) {
    throw Error(ErrorKind::RoleConflict,
                "annotations must type exactly one subject as graph:NodeSet or graph:EdgeSet "
                "(found " + std::to_string(node_sets.size()) + " NodeSet, " +
                    std::to_string(edge_sets.size()) + " EdgeSet)");
  }
  if (!node_sets.empty()) return {node_sets.front(), DatasetRole::NodeSet};
  return {edge_sets.front(), DatasetRole::EdgeSet};
}

Term find_record(const TripleSet& triples, const Term& dataset) {
  auto records = objects_of(triples, dataset, vocab::kHasDataRecord);
  if (records.empty()) {
    throw Error(ErrorKind::MissingMandatoryBinding,
                dataset.to_string() + " has no ccsv:hasDataRecord");
  }
  if (records.size() > 1 || !records.front().is_iri()) {
    throw Error(ErrorKind::AmbiguousBinding,
                dataset.to_string() + " must have exactly one ccsv:hasDataRecord resource");
  }
  return records.front();
}

}  // namespace

SplitFile split_prelude(std::string_view text) {
  std::size_t pos = 0;
  bool after_blank = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    std::size_t next = end == std::string_view::npos ? text.size() : end + 1;
    auto line = text.substr(pos, next - pos);
    bool blank = is_blank_line(line);
    bool quoted = !blank && trim_left(line).front() == '"';
    if (quoted || (after_blank && !blank)) {
      SplitFile split{text.substr(0, pos), text.substr(pos)};
      if (!has_annotations(split.prelude)) {
        throw Error(ErrorKind::NoPrelude, "file starts with the table; annotations are mandatory");
      }
      return split;
    }
    if (blank && pos > 0) after_blank = true;
    pos = next;
  }
  throw Error(ErrorKind::NoTableFound, "no table header found after the annotation prelude");
}

std::string_view to_string(DatasetRole role) {
  return role == DatasetRole::NodeSet ? "NodeSet" : "EdgeSet";
}

std::string_view to_string(BindingRole role) {
  switch (role) {
    case BindingRole::Id: return "hasId";
    case BindingRole::Latitude: return "geo:lat";
    case BindingRole::Longitude: return "geo:long";
    case BindingRole::Label: return "rdfs:label";
    case BindingRole::Source: return "hasSourceNode";
    case BindingRole::Target: return "hasTargetNode";
    case BindingRole::User: return "user";
    case BindingRole::Weight: return "weight";
    case BindingRole::EdgeId: return "edgeId";
  }
  return "?";
}

std::optional<std::size_t> ColumnBindingMap::column(BindingRole role) const {
  auto it = roles.find(role);
  if (it == roles.end()) return std::nullopt;
  return it->second.column;
}

ColumnBindingMap extract_bindings(const TripleSet& triples) {
  auto header = find_dataset(triples);
  Term record = find_record(triples, header.dataset);

  ColumnBindingMap map;
  map.dataset_role = header.role;

  const bool nodes = header.role == DatasetRole::NodeSet;
  std::map<std::string, BindingRole> recognized;
  if (nodes) {
    recognized = {{vocab::kHasId, BindingRole::Id},
                  {vocab::kLat, BindingRole::Latitude},
                  {vocab::kLong, BindingRole::Longitude},
                  {vocab::kLabel, BindingRole::Label}};
  } else {
    recognized = {{vocab::kHasSourceNode, BindingRole::Source},
                  {vocab::kHasTargetNode, BindingRole::Target},
                  {vocab::kHasWeight, BindingRole::Weight}};
  }

  for (auto it = triples.lower_bound(Triple{record, Term{}, Term{}});
       it != triples.end() && it->subject == record; ++it) {
    const auto& predicate = it->predicate.value;
    if (predicate == vocab::kRdfType || predicate == vocab::kAtColumn) continue;

    std::optional<BindingRole> role;
    if (auto r = recognized.find(predicate); r != recognized.end()) {
      role = r->second;
    } else if (!nodes && is_user_predicate(predicate)) {
      role = BindingRole::User;
    }

    const Term& entity = it->object;
    std::optional<std::size_t> column;
    if (entity.is_iri()) column = at_column(triples, entity);

    if (role) {
      if (!column) {
        throw Error(ErrorKind::UnboundEntity,
                    entity.to_string() + " (" + std::string(to_string(*role)) +
                        ") has no ccsv:atColumn");
      }
      if (map.roles.contains(*role)) {
        throw Error(ErrorKind::AmbiguousBinding,
                    "role " + std::string(to_string(*role)) + " is bound more than once");
      }
      map.roles.emplace(*role, ColumnBinding{entity, predicate, *column});
    } else if (column) {
      map.extra.push_back(ColumnBinding{entity, predicate, *column});
    }
  }

  if (auto own = at_column(triples, record)) {
    BindingRole role = nodes ? BindingRole::Id : BindingRole::EdgeId;
    if (!map.roles.contains(role)) {
      map.roles.emplace(role, ColumnBinding{record, vocab::kAtColumn, *own});
    }
  }

  auto require = [&map](BindingRole role) {
    if (!map.has(role)) {
      throw Error(ErrorKind::MissingMandatoryBinding,
                  "data record lacks a " + std::string(to_string(role)) + " binding");
    }
  };
  if (nodes) {
    require(BindingRole::Id);
  } else {
    require(BindingRole::Source);
    require(BindingRole::Target);
  }
  return map;
}

AnnotatedDataset parse_annotated_dataset(std::string_view text, std::string name) {
  auto split = split_prelude(text);
  auto doc = parse_turtle_document(split.prelude);

  AnnotatedDataset ds;
  ds.name = std::move(name);
  ds.table = parse_csv(split.table);
  ds.bindings = extract_bindings(doc.triples);
  ds.role = ds.bindings.dataset_role;

  auto check = [&ds](const ColumnBinding& b) {
    if (b.column >= ds.table.col_count()) {
      throw Error(ErrorKind::BindingOutOfRange,
                  b.entity.to_string() + " is bound to column " + std::to_string(b.column) +
                      " but the table has " + std::to_string(ds.table.col_count()) + " columns");
    }
  };
  for (const auto& [role, binding] : ds.bindings.roles) check(binding);
  for (const auto& binding : ds.bindings.extra) check(binding);

  auto header = find_dataset(doc.triples);
  auto graph_ids = objects_of(doc.triples, header.dataset,
                              ds.role == DatasetRole::NodeSet ? vocab::kIsNodeSetFor
                                                              : vocab::kIsEdgeSetFor);
  if (graph_ids.size() == 1) ds.graph_id = graph_ids.front().value;
  if (graph_ids.size() > 1) {
    throw Error(ErrorKind::RoleConflict, ds.name + " references more than one graph");
  }
  Term record = find_record(doc.triples, header.dataset);
  for (const auto& cls : objects_of(doc.triples, record, vocab::kRdfType)) {
    if (cls.is_iri()) ds.record_classes.insert(cls.value);
  }

  ds.triples = std::move(doc.triples);
  ds.prefixes = std::move(doc.prefixes);
  return ds;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AnnotatedDataset load_annotated_dataset(const std::filesystem::path& path) {
  return parse_annotated_dataset(read_text_file(path), path.filename().string());
}

}  // namespace sbinet
