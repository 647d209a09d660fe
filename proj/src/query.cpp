#include "sbinet/query.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "sbinet/error.hpp"
#include "turtle_lexer.hpp"

namespace sbinet {

KnowledgeGraph& KnowledgeGraph::operator=(const KnowledgeGraph& other) {
  if (this != &other) *this = KnowledgeGraph(other);
  return *this;
}

bool KnowledgeGraph::insert(const Triple& triple) {
  auto [it, inserted] = triples_.insert(triple);
  if (!inserted) return false;
  const Triple* ptr = &*it;
  subject_index_[ptr->subject].push_back(ptr);
  predicate_index_[ptr->predicate].push_back(ptr);
  object_index_[ptr->object].push_back(ptr);
  return true;
}

void KnowledgeGraph::merge(const TripleSet& triples) {
  for (const auto& t : triples) insert(t);
}

const std::vector<const Triple*>& KnowledgeGraph::lookup(const Index& index, const Term& term) {
  static const std::vector<const Triple*> empty;
  auto it = index.find(term);
  return it == index.end() ? empty : it->second;
}

const std::vector<const Triple*>& KnowledgeGraph::by_subject(const Term& term) const {
  return lookup(subject_index_, term);
}
const std::vector<const Triple*>& KnowledgeGraph::by_predicate(const Term& term) const {
  return lookup(predicate_index_, term);
}
const std::vector<const Triple*>& KnowledgeGraph::by_object(const Term& term) const {
  return lookup(object_index_, term);
}

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenType;

class PatternParser {
 public:
  PatternParser(std::string_view text, const PrefixMap& prefixes)
      : lexer_(text, true), prefixes_(prefixes) {}

  Pattern parse() {
    Pattern p = parse_group(TokenType::End);
    if (p.triples.empty()) {
      const auto& tok = lexer_.peek();
      lexer_.fail("pattern needs at least one triple pattern", tok.line, tok.column);
    }
    return p;
  }

 private:
  Pattern parse_group(TokenType terminator) {
    Pattern p;
    while (lexer_.peek().type != terminator) {
      if (lexer_.peek().type == TokenType::End) {
        const auto& tok = lexer_.peek();
        lexer_.fail("unexpected end of pattern", tok.line, tok.column);
      }
      if (lexer_.peek().type == TokenType::Filter) {
        lexer_.next();
        expect(TokenType::Exists, "EXISTS after FILTER");
        expect(TokenType::LBrace, "'{'");
        Pattern sub = parse_group(TokenType::RBrace);
        Token close = lexer_.next();
        if (sub.triples.empty()) lexer_.fail("empty EXISTS group", close.line, close.column);
        p.exists.push_back(std::move(sub));
      } else if (lexer_.peek().type == TokenType::Dot) {
        lexer_.next();
      } else {
        TriplePattern tp;
        tp.subject = parse_term(false);
        tp.predicate = parse_term(true);
        tp.object = parse_term(false);
        p.triples.push_back(std::move(tp));
      }
    }
    return p;
  }

  void expect(TokenType type, const char* what) {
    Token tok = lexer_.next();
    if (tok.type != type) lexer_.fail(std::string("expected ") + what, tok.line, tok.column);
  }

  PatternTerm parse_term(bool predicate_position) {
    Token tok = lexer_.next();
    switch (tok.type) {
      case TokenType::Variable: return Variable{tok.text};
      case TokenType::IriRef: return Term::iri(tok.text);
      case TokenType::KeywordA:
        if (!predicate_position) break;
        return Term::iri(vocab::kRdfType);
      case TokenType::PrefixedName: {
        auto it = prefixes_.find(tok.prefix);
        if (it == prefixes_.end()) {
          throw ParseError(ErrorKind::UndeclaredPrefix,
                           "prefix '" + tok.prefix + ":' is not declared", tok.line, tok.column);
        }
        return Term::iri(it->second + tok.text);
      }
      case TokenType::Integer:
        if (predicate_position) break;
        return Term{TermKind::Integer, tok.text};
      case TokenType::String:
        if (predicate_position) break;
        return Term::string(tok.text);
      default: break;
    }
    lexer_.fail("unexpected token in triple pattern", tok.line, tok.column);
  }

  Lexer lexer_;
  const PrefixMap& prefixes_;
};

const Term* resolve(const PatternTerm& pt, const Solution& bindings) {
  if (const auto* term = std::get_if<Term>(&pt)) return term;
  auto it = bindings.find(std::get<Variable>(pt).name);
  return it == bindings.end() ? nullptr : &it->second;
}

// Binds `pt` to `value`; false on conflict with an existing binding.
bool unify(const PatternTerm& pt, const Term& value, Solution& bindings) {
  if (const auto* term = std::get_if<Term>(&pt)) return *term == value;
  const auto& name = std::get<Variable>(pt).name;
  auto [it, inserted] = bindings.emplace(name, value);
  return inserted || it->second == value;
}

class Matcher {
 public:
  explicit Matcher(const KnowledgeGraph& kg) : kg_(kg) {}

  // Calls `emit` for each solution; stops early when it returns false.
  bool run(const Pattern& pattern, const Solution& seed,
           const std::function<bool(const Solution&)>& emit) const {
    return extend(pattern, 0, seed, emit);
  }

 private:
  bool extend(const Pattern& pattern, std::size_t index, const Solution& bindings,
              const std::function<bool(const Solution&)>& emit) const {
    if (index == pattern.triples.size()) {
      for (const auto& sub : pattern.exists) {
        // run() is stopped by the first solution, so `false` means one exists.
        bool satisfied = !run(sub, bindings, [](const Solution&) { return false; });
        if (!satisfied) return true;
      }
      return emit(bindings);
    }
    const auto& tp = pattern.triples[index];
    const Term* s = resolve(tp.subject, bindings);
    const Term* p = resolve(tp.predicate, bindings);
    const Term* o = resolve(tp.object, bindings);

    auto try_triple = [&](const Triple& t) {
      Solution next = bindings;
      if (!unify(tp.subject, t.subject, next) || !unify(tp.predicate, t.predicate, next) ||
          !unify(tp.object, t.object, next)) {
        return true;
      }
      return extend(pattern, index + 1, next, emit);
    };

    if (s && p && o) {
      if (kg_.contains(Triple{*s, *p, *o})) return try_triple(Triple{*s, *p, *o});
      return true;
    }
    const std::vector<const Triple*>* candidates = nullptr;
    for (auto [term, index_fn] :
         {std::pair{s, &KnowledgeGraph::by_subject}, std::pair{o, &KnowledgeGraph::by_object},
          std::pair{p, &KnowledgeGraph::by_predicate}}) {
      if (!term) continue;
      const auto& c = (kg_.*index_fn)(*term);
      if (!candidates || c.size() < candidates->size()) candidates = &c;
    }
    if (candidates) {
      for (const Triple* t : *candidates) {
        if (!try_triple(*t)) return false;
      }
    } else {
      for (const Triple& t : kg_.triples()) {
        if (!try_triple(t)) return false;
      }
    }
    return true;
  }

  const KnowledgeGraph& kg_;
};

}  // namespace

Pattern parse_pattern(std::string_view text, const PrefixMap& prefixes) {
  return PatternParser(text, prefixes).parse();
}

std::vector<Solution> match(const KnowledgeGraph& kg, const Pattern& pattern) {
  std::vector<Solution> out;
  Matcher(kg).run(pattern, {}, [&out](const Solution& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ask(const KnowledgeGraph& kg, const Pattern& pattern) {
  bool found = false;
  Matcher(kg).run(pattern, {}, [&found](const Solution&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace sbinet
