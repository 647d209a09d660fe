#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbinet/dashboard.hpp"
#include "sbinet/discovery.hpp"
#include "sbinet/enrichment.hpp"
#include "sbinet/network.hpp"

namespace sbinet {

struct PipelineOptions {
  std::size_t k = 10;
  PathCriterion criterion = PathCriterion::Hops;
  unsigned threads = 0;
  BuildOptions build;
};

/// Both datasets parsed, paired, merged into one graph and turned into a
/// network.
struct Inspection {
  ValidatedPair pair;
  KnowledgeGraph kg;
  DomainClass domain = DomainClass::Unknown;
  Network network;
  CapabilitySet capabilities;
};

/// The two files may come in either order.
Inspection inspect(const std::filesystem::path& first, const std::filesystem::path& second,
                   const BuildOptions& options = {});
Inspection inspect(AnnotatedDataset first, AnnotatedDataset second,
                   const BuildOptions& options = {});

nlohmann::json inspection_report(const Inspection& inspection);

struct Discovery {
  std::vector<Verdict> metrics;
  std::vector<Verdict> indicators;
  std::vector<std::string> applicable_metrics;
  std::vector<std::string> applicable_indicators;
};

Discovery discover(const Inspection& inspection, const Catalog& catalog = builtin_catalog());

nlohmann::json discovery_report(const Inspection& inspection, const Discovery& discovery);

struct BuildResult {
  MetricResults results;
  EnrichedTables tables;
  ConceptualModel model;
};

/// Metrics, enrichment, conceptual model and customization. Throws
/// EmptyDashboard when no indicator applies.
BuildResult build_dashboard(const Inspection& inspection, const Discovery& discovery,
                            const PipelineOptions& options,
                            const std::optional<CustomizationManifest>& manifest = std::nullopt);

}  // namespace sbinet
