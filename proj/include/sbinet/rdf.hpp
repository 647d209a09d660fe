#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace sbinet {

enum class TermKind : std::uint8_t { Iri, Integer, String };

/// An RDF term restricted to what annotation preludes use: IRIs (including
/// bare local names such as `<id>`), plain integers and plain strings.
/// Integers keep their canonical decimal spelling in `value`.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;

  static Term iri(std::string value);
  static Term integer(std::int64_t value);
  static Term string(std::string value);

  bool is_iri() const noexcept { return kind == TermKind::Iri; }
  bool is_literal() const noexcept { return kind != TermKind::Iri; }
  std::optional<std::int64_t> as_integer() const;

  /// N-Triples-like spelling, used in diagnostics and reports.
  std::string to_string() const;

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

using TripleSet = std::set<Triple>;
using PrefixMap = std::map<std::string, std::string>;

/// Namespaces and terms of the annotation vocabulary. Namespace IRIs are the
/// ones annotated files declare; prefixed names expand by plain concatenation.
namespace vocab {

inline const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

inline const std::string kVstoi = "http://hadatac.org/ont/vstoi";
inline const std::string kGraph = "http://download.wikicrimes.org/ont/graph";
inline const std::string kCcsv = "http://download.wikicrimes.org/ont/ccsv";
inline const std::string kQoeM = "http://download.wikicrimes.org/ont/qoe-m";
inline const std::string kQoe = "http://download.wikicrimes.org/ont/qoe";
inline const std::string kRdfs = "http://www.w3.org/2000/01/rdf-schema";
inline const std::string kGeo = "http://www.w3.org/2003/01/geo/wgs84_pos";
inline const std::string kCapability = "urn:sbinet:capability#";

inline const std::string kNodeSet = kGraph + "NodeSet";
inline const std::string kEdgeSet = kGraph + "EdgeSet";
inline const std::string kIsNodeSetFor = kGraph + "isNodeSetFor";
inline const std::string kIsEdgeSetFor = kGraph + "isEdgeSetFor";
inline const std::string kHasId = kGraph + "hasId";
inline const std::string kHasSourceNode = kGraph + "hasSourceNode";
inline const std::string kHasTargetNode = kGraph + "hasTargetNode";
inline const std::string kHasWeight = kGraph + "hasWeight";
inline const std::string kDirectedEdge = kGraph + "DirectedEdge";
inline const std::string kHasDataRecord = kCcsv + "hasDataRecord";
inline const std::string kAtColumn = kCcsv + "atColumn";
inline const std::string kLat = kGeo + "lat";
inline const std::string kLong = kGeo + "long";
inline const std::string kLabel = kRdfs + "label";

inline const std::string kBicycleShareStation = kQoeM + "Bicycle-Share_Station";
inline const std::string kBusStop = kQoeM + "Bus_Stop";
inline const std::string kSubwayStation = kQoeM + "Subway_Station";
inline const std::string kBusRoute = kQoeM + "Bus_Route";
inline const std::string kConnections = kQoeM + "conexoes";

/// Prefixes available to query patterns written in source code.
const PrefixMap& default_prefixes();

}  // namespace vocab

}  // namespace sbinet
