#include "sbinet/rdf.hpp"

#include <charconv>

namespace sbinet {

Term Term::iri(std::string value) { return Term{TermKind::Iri, std::move(value)}; }

Term Term::integer(std::int64_t value) {
  return Term{TermKind::Integer, std::to_string(value)};
}

Term Term::string(std::string value) { return Term{TermKind::String, std::move(value)}; }

std::optional<std::int64_t> Term::as_integer() const {
  if (kind != TermKind::Integer) return std::nullopt;
  std::int64_t out = 0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return out;
}

std::string Term::to_string() const {
  switch (kind) {
    case TermKind::Iri: return "<" + value + ">";
    case TermKind::Integer: return value;
    case TermKind::String: {
      std::string out = "\"";
      for (char c : value) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\r': out += "\\r"; break;
          case '\t': out += "\\t"; break;
          default: out += c;
        }
      }
      return out + "\"";
    }
  }
  return value;
}

namespace vocab {

const PrefixMap& default_prefixes() {
  static const PrefixMap prefixes = {
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"vstoi", kVstoi},
      {"graph", kGraph},
      {"ccsv", kCcsv},
      {"qoe-m", kQoeM},
      {"qoe", kQoe},
      {"rdfs", kRdfs},
      {"geo", kGeo},
      {"cap", kCapability},
  };
  return prefixes;
}

}  // namespace vocab

}  // namespace sbinet
