#include "sbinet/discovery.hpp"

#include "sbinet/error.hpp"

namespace sbinet {

std::string_view to_string(DomainClass domain) {
  switch (domain) {
    case DomainClass::BicycleShare: return "BicycleShare";
    case DomainClass::Bus: return "Bus";
    case DomainClass::Subway: return "Subway";
    case DomainClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<DomainClass> parse_domain(std::string_view text) {
  for (auto d : {DomainClass::BicycleShare, DomainClass::Bus, DomainClass::Subway,
                 DomainClass::Unknown}) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

DomainClass detect_domain(const KnowledgeGraph& kg) {
  static const std::vector<std::pair<DomainClass, Pattern>> branches = {
      {DomainClass::BicycleShare, parse_pattern("?type a qoe-m:Bicycle-Share_Station .")},
      {DomainClass::Bus, parse_pattern("?type a qoe-m:Bus_Stop .")},
      {DomainClass::Subway, parse_pattern("?type a qoe-m:Subway_Station .")},
  };
  for (const auto& [domain, pattern] : branches) {
    if (ask(kg, pattern)) return domain;
  }
  return DomainClass::Unknown;
}

ValidatedPair classify_roles(AnnotatedDataset first, AnnotatedDataset second) {
  if (first.role == second.role) {
    throw Error(ErrorKind::RoleConflict, "both datasets are " + std::string(to_string(first.role)) +
                                             "s; one NodeSet and one EdgeSet are required");
  }
  if (first.role == DatasetRole::EdgeSet) std::swap(first, second);
  if (first.graph_id.empty() || second.graph_id.empty()) {
    throw Error(ErrorKind::RoleConflict,
                "both datasets must name their graph via graph:isNodeSetFor / graph:isEdgeSetFor");
  }
  if (first.graph_id != second.graph_id) {
    throw Error(ErrorKind::RoleConflict, "node set describes <" + first.graph_id +
                                             "> but edge set describes <" + second.graph_id + ">");
  }
  std::string graph_id = first.graph_id;
  return ValidatedPair{std::move(first), std::move(second), std::move(graph_id)};
}

KnowledgeGraph build_knowledge_graph(const ValidatedPair& pair) {
  KnowledgeGraph kg;
  kg.merge(pair.nodes.triples);
  kg.merge(pair.edges.triples);
  return kg;
}

std::string_view to_string(Capability capability) {
  switch (capability) {
    case Capability::HasGeo: return "has-geo";
    case Capability::HasWeights: return "has-weights";
    case Capability::RepresentsPaths: return "represents-paths";
    case Capability::HasConnectionCounts: return "has-connection-counts";
  }
  return "?";
}

TripleSet capability_facts(const CapabilitySet& capabilities) {
  const Term subject = Term::iri(kNetworkResource);
  const Term type = Term::iri(vocab::kRdfType);
  TripleSet facts;
  for (auto capability : capabilities) {
    switch (capability) {
      case Capability::HasGeo:
        facts.insert({subject, type, Term::iri(vocab::kCapability + "HasGeo")});
        break;
      case Capability::HasWeights:
        facts.insert({subject, type, Term::iri(vocab::kCapability + "HasWeights")});
        break;
      case Capability::RepresentsPaths:
        facts.insert({subject, type, Term::iri(vocab::kCapability + "RepresentsPaths")});
        break;
      case Capability::HasConnectionCounts:
        facts.insert({subject, type, Term::iri(vocab::kCapability + "HasConnectionCounts")});
        facts.insert({subject, type, Term::iri(vocab::kConnections)});
        break;
    }
  }
  return facts;
}

namespace {

template <typename Spec>
std::vector<Verdict> evaluate(const std::vector<Spec>& specs, const KnowledgeGraph& kg,
                              const CapabilitySet& capabilities, const Catalog& catalog) {
  KnowledgeGraph augmented = kg;
  augmented.merge(capability_facts(capabilities));

  std::map<std::string, bool> holds;
  for (const auto& req : catalog.requirements) holds[req.id] = ask(augmented, req.pattern);

  std::vector<Verdict> out;
  for (const auto& spec : specs) {
    Verdict v{spec.id, true, {}, {}};
    for (const auto& req_id : spec.requirements) {
      auto it = holds.find(req_id);
      if (it != holds.end() && it->second) continue;
      v.applicable = false;
      v.failed.push_back(req_id);
      const Requirement* req = catalog.requirement(req_id);
      v.reasons.push_back(req ? req->reason : "unknown requirement " + req_id);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> applicable_ids(const std::vector<Verdict>& verdicts) {
  std::vector<std::string> ids;
  for (const auto& v : verdicts) {
    if (v.applicable) ids.push_back(v.id);
  }
  return ids;
}

}  // namespace

std::vector<Verdict> evaluate_metrics(const KnowledgeGraph& kg, const CapabilitySet& capabilities,
                                      const Catalog& catalog) {
  return evaluate(catalog.metrics, kg, capabilities, catalog);
}

std::vector<Verdict> evaluate_indicators(const KnowledgeGraph& kg,
                                         const CapabilitySet& capabilities,
                                         const Catalog& catalog) {
  return evaluate(catalog.indicators, kg, capabilities, catalog);
}

std::vector<std::string> discover_indicators(const KnowledgeGraph& kg,
                                             const CapabilitySet& capabilities,
                                             const Catalog& catalog) {
  return applicable_ids(evaluate_indicators(kg, capabilities, catalog));
}

std::vector<std::string> discover_metrics(const KnowledgeGraph& kg,
                                          const CapabilitySet& capabilities,
                                          const Catalog& catalog) {
  return applicable_ids(evaluate_metrics(kg, capabilities, catalog));
}

}  // namespace sbinet
