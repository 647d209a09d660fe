#include <fstream>
#include <set>
#include <sstream>

#include "sbinet/annotated_dataset.hpp"
#include "sbinet/csv.hpp"
#include "sbinet/dashboard.hpp"
#include "sbinet/error.hpp"

namespace sbinet {

namespace fs = std::filesystem;

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Fatal: return "fatal";
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
  }
  return "error";
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

class Checker {
 public:
  std::vector<Diagnostic> out;

  void error(std::string code, std::string msg) {
    out.push_back({Severity::Error, std::move(code), std::move(msg)});
  }
  void schema(const std::string& msg) { error("SchemaViolation", msg); }
  void binding(const std::string& msg) { error("UnresolvedBinding", msg); }

  // Key present with the given type; reports otherwise.
  template <typename Pred>
  bool field(const nlohmann::json& obj, const char* key, Pred ok, const std::string& where,
             const char* expected) {
    if (!obj.contains(key)) {
      schema(where + " lacks \"" + key + "\"");
      return false;
    }
    if (!ok(obj[key])) {
      schema(where + "." + key + " must be " + expected);
      return false;
    }
    return true;
  }
};

bool is_string(const nlohmann::json& j) { return j.is_string(); }
bool is_object(const nlohmann::json& j) { return j.is_object(); }
bool is_array(const nlohmann::json& j) { return j.is_array(); }

}  // namespace

std::vector<Diagnostic> validate_model_json(const nlohmann::json& doc,
                                            const std::vector<std::string>& node_columns,
                                            const std::vector<std::string>& edge_columns,
                                            const nlohmann::json& metrics) {
  Checker c;
  if (!doc.is_object()) {
    c.schema("dashboard.json must hold an object");
    return c.out;
  }
  static const std::set<std::string> top_keys = {"version", "domain",  "generated_at",
                                                 "objects", "data",    "source"};
  for (const auto& [key, value] : doc.items()) {
    if (!top_keys.contains(key)) c.schema("unexpected top-level key \"" + key + "\"");
  }
  if (c.field(doc, "version", [](auto& j) { return j.is_number_integer(); }, "dashboard",
              "an integer") &&
      doc["version"] != 1) {
    c.schema("unsupported version " + doc["version"].dump());
  }
  if (c.field(doc, "domain", is_string, "dashboard", "a string") &&
      !parse_domain(doc["domain"].get<std::string>())) {
    c.schema("unknown domain " + doc["domain"].dump());
  }
  if (doc.contains("generated_at") && !doc["generated_at"].is_string()) {
    c.schema("generated_at must be a string");
  }
  if (c.field(doc, "source", is_object, "dashboard", "an object")) {
    for (const char* k : {"nodes", "edges", "graph"}) c.field(doc["source"], k, is_string, "source", "a string");
  }

  if (c.field(doc, "data", is_object, "dashboard", "an object")) {
    const auto& data = doc["data"];
    if (c.field(data, "nodes", is_object, "data", "an object")) {
      const auto& nodes = data["nodes"];
      c.field(nodes, "file", is_string, "data.nodes", "a string");
      if (c.field(nodes, "id_column", is_string, "data.nodes", "a string") &&
          !has(node_columns, nodes["id_column"].get<std::string>())) {
        c.binding("node id column " + nodes["id_column"].dump() + " is not in nodes.csv");
      }
      for (const char* k : {"label_column", "lat_column", "lon_column"}) {
        if (!nodes.contains(k)) continue;
        if (!nodes[k].is_string()) {
          c.schema(std::string("data.nodes.") + k + " must be a string");
        } else if (!has(node_columns, nodes[k].get<std::string>())) {
          c.binding(std::string(k) + " " + nodes[k].dump() + " is not in nodes.csv");
        }
      }
    }
    if (c.field(data, "edges", is_object, "data", "an object")) {
      const auto& edges = data["edges"];
      c.field(edges, "file", is_string, "data.edges", "a string");
      for (const char* k : {"source_column", "target_column"}) {
        if (c.field(edges, k, is_string, "data.edges", "a string") &&
            !has(edge_columns, edges[k].get<std::string>())) {
          c.binding(std::string(k) + " " + edges[k].dump() + " is not in edges.csv");
        }
      }
    }
    if (c.field(data, "metrics", is_object, "data", "an object")) {
      c.field(data["metrics"], "file", is_string, "data.metrics", "a string");
    }
  }

  if (!c.field(doc, "objects", is_array, "dashboard", "an array")) return c.out;
  std::set<std::string> ids;
  std::size_t index = 0;
  for (const auto& o : doc["objects"]) {
    const std::string where = "objects[" + std::to_string(index++) + "]";
    if (!o.is_object()) {
      c.schema(where + " must be an object");
      continue;
    }
    bool ok = c.field(o, "id", is_string, where, "a string");
    ok &= c.field(o, "title", is_string, where, "a string");
    ok &= c.field(o, "viz", is_string, where, "a string");
    ok &= c.field(o, "measure", is_array, where, "an array");
    ok &= c.field(o, "data", is_object, where, "an object");
    ok &= c.field(o, "style", is_object, where, "an object");
    ok &= c.field(o, "dimension", [](auto& j) { return j.is_null() || (j.is_object() && j.contains("column") && j["column"].is_string()); },
                  where, "null or {\"column\": string}");
    if (o.contains("indicator") && !o["indicator"].is_null() && !o["indicator"].is_number_integer()) {
      c.schema(where + ".indicator must be an integer or null");
    }
    if (!ok) continue;
    const auto id = o["id"].get<std::string>();
    if (!ids.insert(id).second) c.schema("object id \"" + id + "\" appears twice");
    if (!parse_visualization(o["viz"].get<std::string>())) c.schema(where + ".viz is unknown");

    std::vector<std::string> columns;
    const auto& data = o["data"];
    std::optional<DataSource> source;
    if (data.contains("source") && data["source"].is_string()) {
      source = parse_data_source(data["source"].get<std::string>());
    }
    if (!source) {
      c.schema(where + ".data.source must be nodes, edges or metrics");
      continue;
    }
    std::string table = std::string(to_string(*source));
    if (*source == DataSource::Nodes) {
      columns = node_columns;
      table = "nodes.csv";
    } else if (*source == DataSource::Edges) {
      columns = edge_columns;
      table = "edges.csv";
    } else {
      if (!data.contains("key") || !data["key"].is_string()) {
        c.schema(where + ".data.key must name a metrics array");
        continue;
      }
      const auto key = data["key"].get<std::string>();
      table = "metrics.json:" + key;
      if (!metrics.contains(key)) {
        c.binding(id + " references missing metrics entry \"" + key + "\"");
        continue;
      }
      const auto& value = metrics[key];
      auto items = value.is_array() ? value : nlohmann::json::array({value});
      std::set<std::string> fields;
      bool first = true;
      for (const auto& item : items) {
        if (!item.is_object()) {
          c.schema("metrics entry \"" + key + "\" must hold objects");
          break;
        }
        std::set<std::string> here;
        for (const auto& [f, v] : item.items()) here.insert(f);
        if (first) {
          fields = here;
          first = false;
        } else {
          std::set<std::string> common;
          for (const auto& f : fields) {
            if (here.contains(f)) common.insert(f);
          }
          fields = common;
        }
      }
      if (items.empty()) continue;  // nothing to bind against, nothing dangling
      columns.assign(fields.begin(), fields.end());
    }

    auto check = [&](const nlohmann::json& col, const std::string& what) {
      if (!col.is_string()) {
        c.schema(where + "." + what + " must be a string");
      } else if (!has(columns, col.get<std::string>())) {
        c.binding(id + " binds " + what + " " + col.dump() + " missing from " + table);
      }
    };
    if (!o["dimension"].is_null()) check(o["dimension"]["column"], "dimension");
    if (o["dimension"].is_null() && o["measure"].size() != 1) {
      c.schema(id + " has no dimension and so needs exactly one measure");
    }
    for (const auto& m : o["measure"]) {
      if (!m.is_object() || !m.contains("op") || !m.contains("column") || !m["op"].is_string() ||
          !parse_measure_op(m["op"].get<std::string>())) {
        c.schema(id + " has a malformed measure " + m.dump());
        continue;
      }
      check(m["column"], "measure");
    }
    if (*source != DataSource::Metrics) {
      for (const char* k : {"color_by", "label"}) {
        if (o["style"].contains(k)) check(o["style"][k], std::string("style.") + k);
      }
    }
  }
  return c.out;
}

std::vector<Diagnostic> validate_bundle(const fs::path& dir) {
  std::vector<Diagnostic> out;
  auto fatal = [&](std::string code, std::string msg) {
    out.push_back({Severity::Fatal, std::move(code), std::move(msg)});
  };
  for (const char* name : {"dashboard.json", "nodes.csv", "edges.csv", "metrics.json"}) {
    if (!fs::is_regular_file(dir / name)) fatal("MissingFile", std::string(name) + " is missing");
  }
  if (!out.empty()) return out;

  nlohmann::json doc, metrics;
  DataTable nodes, edges;
  try {
    doc = nlohmann::json::parse(read_text_file(dir / "dashboard.json"));
    metrics = nlohmann::json::parse(read_text_file(dir / "metrics.json"));
  } catch (const std::exception& e) {
    fatal("SchemaViolation", std::string("unreadable JSON: ") + e.what());
    return out;
  }
  try {
    nodes = parse_csv(read_text_file(dir / "nodes.csv"));
    edges = parse_csv(read_text_file(dir / "edges.csv"));
  } catch (const std::exception& e) {
    fatal("SchemaViolation", std::string("unreadable CSV: ") + e.what());
    return out;
  }
  if (!metrics.is_object()) {
    fatal("SchemaViolation", "metrics.json must hold an object");
    return out;
  }
  out = validate_model_json(doc, nodes.header, edges.header, metrics);
  if (doc.is_object() && doc.contains("data") && doc["data"].is_object()) {
    for (const char* part : {"nodes", "edges", "metrics"}) {
      const auto& d = doc["data"];
      if (d.contains(part) && d[part].is_object() && d[part].contains("file") &&
          d[part]["file"].is_string()) {
        auto file = d[part]["file"].get<std::string>();
        if (!fs::is_regular_file(dir / file)) {
          out.push_back({Severity::Fatal, "MissingFile", file + " is referenced but missing"});
        }
      }
    }
  }
  return out;
}

void emit_bundle(const ConceptualModel& model, const EnrichedTables& tables,
                 const fs::path& out_dir, const EmitOptions& options) {
  const auto doc = model_to_json(model, options);
  auto problems = validate_model_json(doc, tables.nodes.header, tables.edges.header, tables.metrics);
  if (!problems.empty()) {
    throw Error(ErrorKind::SchemaViolation, problems.front().message);
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  write_file(out_dir / "nodes.csv", write_csv(tables.nodes));
  write_file(out_dir / "edges.csv", write_csv(tables.edges));
  write_file(out_dir / "metrics.json", dump(tables.metrics));
  write_file(out_dir / "dashboard.json", dump(doc));
}

}  // namespace sbinet
