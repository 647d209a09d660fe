#include "sbinet/dashboard.hpp"

#include <algorithm>
#include <set>

#include "sbinet/annotated_dataset.hpp"
#include "sbinet/error.hpp"

namespace sbinet {

std::string_view to_string(DataSource source) {
  switch (source) {
    case DataSource::Nodes: return "nodes";
    case DataSource::Edges: return "edges";
    case DataSource::Metrics: return "metrics";
  }
  return "nodes";
}

std::optional<DataSource> parse_data_source(std::string_view text) {
  for (auto s : {DataSource::Nodes, DataSource::Edges, DataSource::Metrics}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

const InteractiveObject* ConceptualModel::find(std::string_view id) const {
  for (const auto& o : objects) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

namespace {

// Item fields of the arrays written to metrics.json.
const std::map<std::string, std::vector<std::string>>& metrics_arrays() {
  static const std::map<std::string, std::vector<std::string>> arrays = {
      {"degree_histogram", {"count", "degree"}},
      {"diameter_path", {"length", "nodes", "route"}},
      {"longest_min_paths", {"length", "nodes", "route"}},
      {"lowest_degree", {"degree", "label", "node"}},
  };
  return arrays;
}

std::string header_of(const AnnotatedDataset& ds, BindingRole role) {
  return ds.table.header[*ds.bindings.column(role)];
}

std::optional<std::string> optional_header(const AnnotatedDataset& ds, BindingRole role) {
  if (auto c = ds.bindings.column(role)) return ds.table.header[*c];
  return std::nullopt;
}

std::string basename(const std::string& name) {
  return std::filesystem::path(name).filename().string();
}

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

ConceptualModel build_conceptual_model(const std::vector<std::string>& indicator_ids,
                                       const MetricResults& results, const EnrichedTables& tables,
                                       const ValidatedPair& pair, DomainClass domain,
                                       const Catalog& catalog) {
  if (indicator_ids.empty()) {
    throw Error(ErrorKind::EmptyDashboard, "no indicator applies to this network");
  }
  namespace ind = indicator_ids;
  ConceptualModel model;
  model.domain = domain;
  model.source = {basename(pair.nodes.name), basename(pair.edges.name), pair.graph_id};
  model.node_columns = {header_of(pair.nodes, BindingRole::Id),
                        optional_header(pair.nodes, BindingRole::Label),
                        optional_header(pair.nodes, BindingRole::Latitude),
                        optional_header(pair.nodes, BindingRole::Longitude)};
  // Scaled copies when enrichment wrote them; the raw cells may be in 10^-6 degrees.
  if (contains(tables.nodes.header, column_names::kLatitude)) {
    model.node_columns.lat = std::string(column_names::kLatitude);
    model.node_columns.lon = std::string(column_names::kLongitude);
  }
  model.node_table_columns = tables.nodes.header;
  model.edge_table_columns = tables.edges.header;
  for (const auto& [key, fields] : metrics_arrays()) {
    if (tables.metrics.contains(key)) model.metrics_fields[key] = fields;
  }

  const std::set<std::string> wanted(indicator_ids.begin(), indicator_ids.end());
  for (const auto& spec : catalog.indicators) {
    if (!wanted.contains(spec.id)) continue;
    for (const auto& metric : spec.metrics) {
      if (!results.has(metric)) {
        throw Error(ErrorKind::MissingResult,
                    "indicator " + spec.id + " needs metric " + metric + ", which was not computed");
      }
    }
    InteractiveObject o;
    o.id = spec.id;
    o.number = spec.number;
    o.title = spec.title(domain);
    o.viz = spec.visualization;

    const bool route = spec.dimension == "route";
    if (route) {
      o.data = DataSource::Metrics;
      o.metrics_key = spec.id == ind::kDiameterRoute ? "diameter_path" : "longest_min_paths";
      o.dimension = "route";
    } else if (spec.dimension) {
      o.dimension = model.node_columns.id;
    }
    for (const auto& m : spec.measures) {
      o.measures.push_back({m.op, route ? m.field : std::string(kEnrichmentPrefix) + m.field});
    }
    const bool available =
        route ? model.metrics_fields.contains(*o.metrics_key)
              : std::all_of(o.measures.begin(), o.measures.end(), [&](const MeasureBinding& b) {
                  return contains(model.node_table_columns, b.column);
                });
    if (!available) {
      throw Error(ErrorKind::MissingResult, "indicator " + spec.id + " has no result to bind");
    }

    auto& style = o.style;
    if (!route) style.label = model.node_columns.label;
    if (spec.id == ind::kAverageInterconnections) {
      style.reference_line = results.average_degree;
      style.reference_label = "mean";
    } else if (spec.id == ind::kCommunitiesMap) {
      style.color_by = o.measures.front().column;
    } else if (spec.id == ind::kCentralityMap || spec.id == ind::kTerminalCandidates) {
      style.color_by = o.measures.front().column;
      style.highlight = "top_quantile(0.9)";
    } else if (spec.id == ind::kLowestOffer) {
      style.order = "asc";
      style.limit = results.k;
    } else if (spec.id == ind::kExpressRoutes) {
      style.order = "desc";
      style.limit = results.k;
    }
    model.objects.push_back(std::move(o));
  }
  if (model.objects.empty()) {
    throw Error(ErrorKind::EmptyDashboard, "none of the given indicator ids is in the catalog");
  }
  return model;
}

// ---- customization ----

namespace {

[[noreturn]] void bad_manifest(const std::string& msg) {
  throw Error(ErrorKind::InvalidManifest, msg);
}

std::string expect_string(const nlohmann::json& j, const std::string& what) {
  if (!j.is_string()) bad_manifest(what + " must be a string");
  return j.get<std::string>();
}

std::vector<MeasureBinding> parse_measures(const nlohmann::json& j) {
  if (!j.is_array()) bad_manifest("measure must be an array");
  std::vector<MeasureBinding> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("op") || !item.contains("column")) {
      bad_manifest("each measure needs \"op\" and \"column\"");
    }
    auto op = parse_measure_op(expect_string(item["op"], "measure op"));
    if (!op) bad_manifest("unknown measure op " + item["op"].dump());
    out.push_back({*op, expect_string(item["column"], "measure column")});
  }
  return out;
}

std::optional<std::string> parse_dimension(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return expect_string(j, "dimension");
}

StyleHints parse_style(const nlohmann::json& j) {
  if (!j.is_object()) bad_manifest("style must be an object");
  StyleHints s;
  for (const auto& [key, value] : j.items()) {
    if (key == "reference_line") {
      if (!value.is_number()) bad_manifest("style.reference_line must be a number");
      s.reference_line = value.get<double>();
    } else if (key == "limit") {
      if (!value.is_number_unsigned()) bad_manifest("style.limit must be a non-negative integer");
      s.limit = value.get<std::size_t>();
    } else if (key == "reference_label") {
      s.reference_label = expect_string(value, "style.reference_label");
    } else if (key == "color_by") {
      s.color_by = expect_string(value, "style.color_by");
    } else if (key == "highlight") {
      s.highlight = expect_string(value, "style.highlight");
    } else if (key == "label") {
      s.label = expect_string(value, "style.label");
    } else if (key == "order") {
      s.order = expect_string(value, "style.order");
      if (s.order != "asc" && s.order != "desc") bad_manifest("style.order must be asc or desc");
    } else {
      bad_manifest("unknown style key " + key);
    }
  }
  return s;
}

std::string token_of(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  return expect_string(j, what);
}

}  // namespace

CustomizationManifest parse_manifest(std::string_view json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_manifest(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) bad_manifest("manifest must be a JSON object");
  CustomizationManifest m;
  for (const auto& [key, value] : root.items()) {
    if (key == "order") {
      if (!value.is_array()) bad_manifest("order must be an array");
      for (const auto& t : value) m.order.push_back(token_of(t, "order entry"));
    } else if (key == "overrides") {
      if (!value.is_object()) bad_manifest("overrides must be an object keyed by object id");
      for (const auto& [id, body] : value.items()) {
        if (!body.is_object()) bad_manifest("override for " + id + " must be an object");
        ObjectOverride ov;
        for (const auto& [field, v] : body.items()) {
          if (field == "title") {
            ov.title = expect_string(v, "title");
          } else if (field == "dimension") {
            ov.dimension = parse_dimension(v);
          } else if (field == "measure") {
            ov.measures = parse_measures(v);
          } else {
            bad_manifest("unknown override field " + field);
          }
        }
        m.overrides[id] = std::move(ov);
      }
    } else if (key == "add") {
      if (!value.is_array()) bad_manifest("add must be an array");
      for (const auto& item : value) {
        if (!item.is_object()) bad_manifest("each added object must be an object");
        InteractiveObject o;
        for (const char* required : {"id", "title", "viz", "measure"}) {
          if (!item.contains(required)) {
            bad_manifest(std::string("added object is missing \"") + required + "\"");
          }
        }
        o.id = expect_string(item["id"], "id");
        if (o.id.empty()) bad_manifest("added object id is empty");
        o.title = expect_string(item["title"], "title");
        auto viz = parse_visualization(expect_string(item["viz"], "viz"));
        if (!viz) bad_manifest("unknown visualization " + item["viz"].dump());
        o.viz = *viz;
        o.measures = parse_measures(item["measure"]);
        if (item.contains("dimension")) o.dimension = parse_dimension(item["dimension"]);
        if (item.contains("data")) {
          auto src = parse_data_source(expect_string(item["data"], "data"));
          if (!src) bad_manifest("data must be nodes, edges or metrics");
          o.data = *src;
        }
        if (item.contains("key")) o.metrics_key = expect_string(item["key"], "key");
        if (item.contains("style")) o.style = parse_style(item["style"]);
        for (const auto& [field, v] : item.items()) {
          static const std::set<std::string> known = {"id",        "title", "viz", "measure",
                                                      "dimension", "data",  "key", "style"};
          if (!known.contains(field)) bad_manifest("unknown field " + field + " in added object");
        }
        m.additions.push_back(std::move(o));
      }
    } else {
      bad_manifest("unknown manifest key " + key);
    }
  }
  return m;
}

CustomizationManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text_file(path));
}

namespace {

std::size_t resolve_object(const ConceptualModel& model, const std::string& token) {
  for (std::size_t i = 0; i < model.objects.size(); ++i) {
    if (model.objects[i].id == token) return i;
  }
  if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit)) {
    const int number = std::stoi(token);
    for (std::size_t i = 0; i < model.objects.size(); ++i) {
      if (model.objects[i].number == number) return i;
    }
  }
  throw Error(ErrorKind::UnknownObjectId, "no object '" + token + "' in the dashboard");
}

void check_columns(const ConceptualModel& model, const InteractiveObject& o) {
  std::vector<std::string> available;
  switch (o.data) {
    case DataSource::Nodes: available = model.node_table_columns; break;
    case DataSource::Edges: available = model.edge_table_columns; break;
    case DataSource::Metrics: {
      if (!o.metrics_key || !model.metrics_fields.contains(*o.metrics_key)) {
        throw Error(ErrorKind::UnknownColumn,
                    "object " + o.id + " names no metrics array available in this bundle");
      }
      available = model.metrics_fields.at(*o.metrics_key);
      break;
    }
  }
  auto check = [&](const std::string& column) {
    if (!contains(available, column)) {
      throw Error(ErrorKind::UnknownColumn, "object " + o.id + " binds unknown column '" + column +
                                                "' of " + std::string(to_string(o.data)));
    }
  };
  if (o.dimension) check(*o.dimension);
  for (const auto& m : o.measures) check(m.column);
  if (o.data != DataSource::Metrics) {
    if (o.style.color_by) check(*o.style.color_by);
    if (o.style.label) check(*o.style.label);
  }
  if (!o.dimension && o.measures.size() != 1) {
    throw Error(ErrorKind::InvalidManifest,
                "object " + o.id + " has no dimension and so needs exactly one measure");
  }
  if (o.measures.empty()) {
    throw Error(ErrorKind::InvalidManifest, "object " + o.id + " needs at least one measure");
  }
}

}  // namespace

ConceptualModel apply_customization(ConceptualModel model, const CustomizationManifest& manifest) {
  for (const auto& [token, ov] : manifest.overrides) {
    auto& o = model.objects[resolve_object(model, token)];
    InteractiveObject updated = o;
    if (ov.title) updated.title = *ov.title;
    if (ov.dimension) updated.dimension = *ov.dimension;
    if (ov.measures) updated.measures = *ov.measures;
    check_columns(model, updated);
    o = std::move(updated);
  }
  for (const auto& add : manifest.additions) {
    if (const auto* existing = model.find(add.id)) {
      if (*existing == add) continue;
      throw Error(ErrorKind::InvalidManifest, "object id '" + add.id + "' is already taken");
    }
    check_columns(model, add);
    model.objects.push_back(add);
  }
  if (!manifest.order.empty()) {
    std::vector<std::size_t> picked;
    for (const auto& token : manifest.order) {
      auto i = resolve_object(model, token);
      if (std::find(picked.begin(), picked.end(), i) == picked.end()) picked.push_back(i);
    }
    std::vector<InteractiveObject> reordered;
    for (auto i : picked) reordered.push_back(model.objects[i]);
    for (std::size_t i = 0; i < model.objects.size(); ++i) {
      if (std::find(picked.begin(), picked.end(), i) == picked.end()) {
        reordered.push_back(model.objects[i]);
      }
    }
    model.objects = std::move(reordered);
  }
  return model;
}

nlohmann::json model_to_json(const ConceptualModel& model, const EmitOptions& options) {
  using nlohmann::json;
  json objects = json::array();
  for (const auto& o : model.objects) {
    json measures = json::array();
    for (const auto& m : o.measures) {
      measures.push_back({{"op", std::string(to_string(m.op))}, {"column", m.column}});
    }
    json data = {{"source", std::string(to_string(o.data))}};
    if (o.metrics_key) data["key"] = *o.metrics_key;
    json style = json::object();
    const auto& s = o.style;
    if (s.reference_line) style["reference_line"] = round_significant(*s.reference_line);
    if (s.reference_label) style["reference_label"] = *s.reference_label;
    if (s.color_by) style["color_by"] = *s.color_by;
    if (s.highlight) style["highlight"] = *s.highlight;
    if (s.label) style["label"] = *s.label;
    if (s.order) style["order"] = *s.order;
    if (s.limit) style["limit"] = *s.limit;
    objects.push_back({
        {"id", o.id},
        {"indicator", o.number > 0 ? json(o.number) : json(nullptr)},
        {"title", o.title},
        {"viz", std::string(to_string(o.viz))},
        {"dimension", o.dimension ? json{{"column", *o.dimension}} : json(nullptr)},
        {"measure", std::move(measures)},
        {"data", std::move(data)},
        {"style", std::move(style)},
    });
  }
  json nodes = {{"file", "nodes.csv"}, {"id_column", model.node_columns.id}};
  if (model.node_columns.label) nodes["label_column"] = *model.node_columns.label;
  if (model.node_columns.lat) nodes["lat_column"] = *model.node_columns.lat;
  if (model.node_columns.lon) nodes["lon_column"] = *model.node_columns.lon;
  json doc = {
      {"version", 1},
      {"domain", std::string(to_string(model.domain))},
      {"objects", std::move(objects)},
      {"data",
       {{"nodes", std::move(nodes)},
        {"edges",
         {{"file", "edges.csv"},
          {"source_column", std::string(column_names::kSource)},
          {"target_column", std::string(column_names::kTarget)}}},
        {"metrics", {{"file", "metrics.json"}}}}},
      {"source",
       {{"nodes", model.source.nodes_file},
        {"edges", model.source.edges_file},
        {"graph", model.source.graph}}},
  };
  if (!options.reproducible) doc["generated_at"] = options.generated_at;
  return doc;
}

}  // namespace sbinet
