#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbinet/annotated_dataset.hpp"
#include "sbinet/catalog.hpp"
#include "sbinet/domain.hpp"
#include "sbinet/query.hpp"

namespace sbinet {

/// First match in the fixed order BicycleShare, Bus, Subway; Unknown
/// otherwise. Depends only on rdf:type triples.
DomainClass detect_domain(const KnowledgeGraph& kg);

/// A node set and an edge set describing the same graph.
struct ValidatedPair {
  AnnotatedDataset nodes;
  AnnotatedDataset edges;
  std::string graph_id;
};

/// Accepts the datasets in either order. Throws RoleConflict unless there
/// is exactly one NodeSet and one EdgeSet and both reference the same graph.
ValidatedPair classify_roles(AnnotatedDataset first, AnnotatedDataset second);

KnowledgeGraph build_knowledge_graph(const ValidatedPair& pair);

/// Facts derived from the built network, queried like any other triple.
enum class Capability { HasGeo, HasWeights, RepresentsPaths, HasConnectionCounts };
using CapabilitySet = std::set<Capability>;

std::string_view to_string(Capability capability);

/// Subject of every capability triple.
inline const std::string kNetworkResource = "urn:sbinet:network";

TripleSet capability_facts(const CapabilitySet& capabilities);

struct Verdict {
  std::string id;
  bool applicable = false;
  std::vector<std::string> failed;   // requirement ids that do not hold
  std::vector<std::string> reasons;  // matching human-readable reasons
};

/// Every catalog metric / indicator with its applicability. A spec is
/// applicable iff all its requirement patterns match kg ∪ capability facts.
std::vector<Verdict> evaluate_metrics(const KnowledgeGraph& kg, const CapabilitySet& capabilities,
                                      const Catalog& catalog);
std::vector<Verdict> evaluate_indicators(const KnowledgeGraph& kg,
                                         const CapabilitySet& capabilities,
                                         const Catalog& catalog);

/// Ids of the applicable indicators, in catalog order.
std::vector<std::string> discover_indicators(const KnowledgeGraph& kg,
                                             const CapabilitySet& capabilities,
                                             const Catalog& catalog);
std::vector<std::string> discover_metrics(const KnowledgeGraph& kg,
                                          const CapabilitySet& capabilities,
                                          const Catalog& catalog);

}  // namespace sbinet
