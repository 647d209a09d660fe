#include "sbinet/pipeline.hpp"

#include "sbinet/error.hpp"

namespace sbinet {

Inspection inspect(AnnotatedDataset first, AnnotatedDataset second, const BuildOptions& options) {
  Inspection out{classify_roles(std::move(first), std::move(second)), {}, {}, {}, {}};
  out.kg = build_knowledge_graph(out.pair);
  out.domain = detect_domain(out.kg);
  out.network = build_network(out.pair, options);
  out.capabilities = capabilities_of(out.network);
  return out;
}

Inspection inspect(const std::filesystem::path& first, const std::filesystem::path& second,
                   const BuildOptions& options) {
  return inspect(load_annotated_dataset(first), load_annotated_dataset(second), options);
}

namespace {

nlohmann::json dataset_json(const AnnotatedDataset& ds) {
  nlohmann::json bindings = nlohmann::json::object();
  for (const auto& [role, b] : ds.bindings.roles) {
    bindings[std::string(to_string(role))] = {
        {"column", b.column},
        {"header", ds.table.header[b.column]},
        {"entity", b.entity.value},
        {"predicate", b.predicate},
    };
  }
  nlohmann::json extra = nlohmann::json::array();
  for (const auto& b : ds.bindings.extra) {
    extra.push_back({{"column", b.column},
                     {"header", ds.table.header[b.column]},
                     {"entity", b.entity.value},
                     {"predicate", b.predicate}});
  }
  return {
      {"file", std::filesystem::path(ds.name).filename().string()},
      {"role", std::string(to_string(ds.role))},
      {"rows", ds.table.row_count()},
      {"columns", ds.table.header},
      {"record_classes", ds.record_classes},
      {"bindings", std::move(bindings)},
      {"unrecognized_bindings", std::move(extra)},
  };
}

nlohmann::json verdicts_json(const std::vector<Verdict>& verdicts, const Catalog& catalog,
                             DomainClass domain, bool indicators) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json j = {{"id", v.id}, {"applicable", v.applicable}, {"failed", v.failed},
                        {"reasons", v.reasons}};
    if (indicators) {
      if (const auto* spec = catalog.indicator(v.id)) {
        j["number"] = spec->number;
        j["title"] = spec->title(domain);
        j["visualization"] = std::string(to_string(spec->visualization));
      }
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

nlohmann::json inspection_report(const Inspection& in) {
  const auto& net = in.network;
  nlohmann::json caps = nlohmann::json::array();
  for (auto c : in.capabilities) caps.push_back(std::string(to_string(c)));
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& t : capability_facts(in.capabilities)) {
    facts.push_back(t.subject.to_string() + " " + t.predicate.to_string() + " " +
                    t.object.to_string() + " .");
  }
  return {
      {"domain", std::string(to_string(in.domain))},
      {"graph", in.pair.graph_id},
      {"datasets", {{"nodes", dataset_json(in.pair.nodes)}, {"edges", dataset_json(in.pair.edges)}}},
      {"knowledge_graph", {{"triples", in.kg.size()}}},
      {"network",
       {{"nodes", net.node_count()},
        {"edges", net.edge_count()},
        {"directed", net.directed()},
        {"represents_paths", net.represents_paths()},
        {"has_geo", net.has_geo()},
        {"has_weights", net.has_weights()}}},
      {"capabilities", std::move(caps)},
      {"capability_facts", std::move(facts)},
      {"warnings", net.warnings()},
  };
}

Discovery discover(const Inspection& in, const Catalog& catalog) {
  Discovery d;
  d.metrics = evaluate_metrics(in.kg, in.capabilities, catalog);
  d.indicators = evaluate_indicators(in.kg, in.capabilities, catalog);
  for (const auto& v : d.metrics) {
    if (v.applicable) d.applicable_metrics.push_back(v.id);
  }
  for (const auto& v : d.indicators) {
    if (v.applicable) d.applicable_indicators.push_back(v.id);
  }
  return d;
}

nlohmann::json discovery_report(const Inspection& in, const Discovery& d) {
  const auto& catalog = builtin_catalog();
  return {
      {"domain", std::string(to_string(in.domain))},
      {"applicable_indicators", d.applicable_indicators},
      {"applicable_metrics", d.applicable_metrics},
      {"indicators", verdicts_json(d.indicators, catalog, in.domain, true)},
      {"metrics", verdicts_json(d.metrics, catalog, in.domain, false)},
  };
}

BuildResult build_dashboard(const Inspection& in, const Discovery& d,
                            const PipelineOptions& options,
                            const std::optional<CustomizationManifest>& manifest) {
  if (options.criterion == PathCriterion::Time) {
    throw Error(ErrorKind::UnsupportedCriterion,
                "the time criterion needs travel times, which the input format does not carry");
  }
  if (d.applicable_indicators.empty()) {
    throw Error(ErrorKind::EmptyDashboard, "no indicator applies to this network");
  }
  BuildResult out;
  out.results = compute_metrics(in.network, d.applicable_metrics, options.k,
                                PathOptions{options.criterion, options.threads});
  out.tables = enrich_tables(in.pair, in.network, out.results);
  out.model = build_conceptual_model(d.applicable_indicators, out.results, out.tables, in.pair,
                                     in.domain);
  if (manifest) out.model = apply_customization(std::move(out.model), *manifest);
  return out;
}

}  // namespace sbinet
