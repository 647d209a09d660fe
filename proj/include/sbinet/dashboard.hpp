#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sbinet/catalog.hpp"
#include "sbinet/domain.hpp"
#include "sbinet/enrichment.hpp"

namespace sbinet {

enum class DataSource { Nodes, Edges, Metrics };

std::string_view to_string(DataSource source);
std::optional<DataSource> parse_data_source(std::string_view text);

struct MeasureBinding {
  MeasureOp op = MeasureOp::Direct;
  std::string column;

  bool operator==(const MeasureBinding&) const = default;
};

/// Presentation hints. The viewer decides how to draw them.
struct StyleHints {
  std::optional<double> reference_line;
  std::optional<std::string> reference_label;
  std::optional<std::string> color_by;
  std::optional<std::string> highlight;  // e.g. "top_quantile(0.9)"
  std::optional<std::string> label;      // node column shown on marks
  std::optional<std::string> order;      // "asc" | "desc"
  std::optional<std::size_t> limit;

  bool operator==(const StyleHints&) const = default;
};

struct InteractiveObject {
  std::string id;
  int number = 0;  // catalog number, 0 for user objects
  std::string title;
  Visualization viz = Visualization::BarChart;
  std::optional<std::string> dimension;  // column name
  std::vector<MeasureBinding> measures;
  DataSource data = DataSource::Nodes;
  std::optional<std::string> metrics_key;  // array inside metrics.json when data = Metrics
  StyleHints style;

  bool operator==(const InteractiveObject&) const = default;
};

struct SourceMetadata {
  std::string nodes_file;  // basenames only
  std::string edges_file;
  std::string graph;
};

/// Column names of the enriched node table the viewer needs to join on.
struct NodeColumns {
  std::string id;
  std::optional<std::string> label;
  std::optional<std::string> lat;
  std::optional<std::string> lon;
};

struct ConceptualModel {
  DomainClass domain = DomainClass::Unknown;
  std::vector<InteractiveObject> objects;
  SourceMetadata source;
  NodeColumns node_columns;
  // Columns available for bindings, per data source; for Metrics, the keys
  // of each metrics array mapped to the fields of its items.
  std::vector<std::string> node_table_columns;
  std::vector<std::string> edge_table_columns;
  std::map<std::string, std::vector<std::string>> metrics_fields;

  const InteractiveObject* find(std::string_view id) const;
};

/// One object per applicable indicator in catalog order. Throws
/// EmptyDashboard when nothing applies and MissingResult when an applicable
/// indicator has no computed metric behind it.
ConceptualModel build_conceptual_model(const std::vector<std::string>& indicator_ids,
                                       const MetricResults& results, const EnrichedTables& tables,
                                       const ValidatedPair& pair, DomainClass domain,
                                       const Catalog& catalog = builtin_catalog());

struct ObjectOverride {
  std::optional<std::string> title;
  std::optional<std::optional<std::string>> dimension;  // inner nullopt clears it
  std::optional<std::vector<MeasureBinding>> measures;
};

/// Reorders, overrides and appends objects. Objects are named by id or by
/// catalog number.
struct CustomizationManifest {
  std::vector<std::string> order;
  std::map<std::string, ObjectOverride> overrides;
  std::vector<InteractiveObject> additions;
};

/// Throws InvalidManifest.
CustomizationManifest parse_manifest(std::string_view json_text);
CustomizationManifest load_manifest(const std::filesystem::path& path);

/// Overrides, then additions, then ordering; applying the same manifest twice
/// equals applying it once. Throws UnknownObjectId, UnknownColumn, InvalidManifest.
ConceptualModel apply_customization(ConceptualModel model, const CustomizationManifest& manifest);

struct EmitOptions {
  bool reproducible = false;
  std::string generated_at;  // used when not reproducible; ISO-8601 UTC
};

nlohmann::json model_to_json(const ConceptualModel& model, const EmitOptions& options);

/// Writes dashboard.json, nodes.csv, edges.csv and metrics.json into
/// out_dir. Checks the model against the tables first and throws
/// SchemaViolation without writing anything; IoError on write failure.
void emit_bundle(const ConceptualModel& model, const EnrichedTables& tables,
                 const std::filesystem::path& out_dir, const EmitOptions& options = {});

enum class Severity { Fatal, Error, Warning };
std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;  // MissingFile, SchemaViolation, UnresolvedBinding
  std::string message;
};

/// Schema and referential checks over a bundle directory. Empty means valid.
std::vector<Diagnostic> validate_bundle(const std::filesystem::path& dir);

/// Schema checks over an in-memory dashboard document plus the bundle's
/// tables and metrics.
std::vector<Diagnostic> validate_model_json(const nlohmann::json& dashboard,
                                            const std::vector<std::string>& node_columns,
                                            const std::vector<std::string>& edge_columns,
                                            const nlohmann::json& metrics);

}  // namespace sbinet
