#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sbinet/rdf.hpp"

namespace sbinet {

/// In-memory triple store with subject/predicate/object indexes.
///
/// Insertion has set semantics, so merging the same triples twice is a
/// no-op. Build it on one thread; once filled it is only read and may be
/// queried concurrently.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  explicit KnowledgeGraph(const TripleSet& triples) { merge(triples); }
  // Indexes point into triples_, so copies rebuild them; moves keep the nodes.
  KnowledgeGraph(const KnowledgeGraph& other) { merge(other.triples_); }
  KnowledgeGraph& operator=(const KnowledgeGraph& other);
  KnowledgeGraph(KnowledgeGraph&&) noexcept = default;
  KnowledgeGraph& operator=(KnowledgeGraph&&) noexcept = default;

  bool insert(const Triple& triple);
  void merge(const TripleSet& triples);

  bool contains(const Triple& triple) const { return triples_.contains(triple); }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const TripleSet& triples() const noexcept { return triples_; }

  /// Triples whose subject (or predicate, or object) equals `term`.
  const std::vector<const Triple*>& by_subject(const Term& term) const;
  const std::vector<const Triple*>& by_predicate(const Term& term) const;
  const std::vector<const Triple*>& by_object(const Term& term) const;

 private:
  using Index = std::map<Term, std::vector<const Triple*>>;
  static const std::vector<const Triple*>& lookup(const Index& index, const Term& term);

  TripleSet triples_;
  Index subject_index_;
  Index predicate_index_;
  Index object_index_;
};

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

/// A basic graph pattern plus `FILTER EXISTS { ... }` groups evaluated
/// against each candidate solution.
struct Pattern {
  std::vector<TriplePattern> triples;
  std::vector<Pattern> exists;
};

/// Variable name (without `?`) to bound term.
using Solution = std::map<std::string, Term>;

/// Parses `?s graph:hasId ?i . ?i ccsv:atColumn ?c` style patterns with
/// optional `FILTER EXISTS { ... }` groups. Prefixed names resolve against
/// `prefixes` (the annotation vocabulary by default).
Pattern parse_pattern(std::string_view text,
                      const PrefixMap& prefixes = vocab::default_prefixes());

/// All solutions, sorted by their bound terms and free of duplicates.
std::vector<Solution> match(const KnowledgeGraph& kg, const Pattern& pattern);

bool ask(const KnowledgeGraph& kg, const Pattern& pattern);

}  // namespace sbinet
