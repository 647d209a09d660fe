#include "sbinet/turtle.hpp"

#include <cctype>
#include <charconv>

#include "turtle_lexer.hpp"

namespace sbinet {

namespace detail {

namespace {

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Lexer::Lexer(std::string_view input, bool query_mode)
    : input_(input), query_mode_(query_mode) {
  if (input_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
}

void Lexer::fail(const std::string& message, std::size_t line, std::size_t column) const {
  throw ParseError(ErrorKind::SyntaxError, message, line, column);
}

void Lexer::advance() {
  if (pos_ >= input_.size()) return;
  if (input_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

const Token& Lexer::peek() {
  if (!has_peeked_) {
    peeked_ = lex();
    has_peeked_ = true;
  }
  return peeked_;
}

Token Lexer::next() {
  if (has_peeked_) {
    has_peeked_ = false;
    return std::move(peeked_);
  }
  return lex();
}

void Lexer::skip_space_and_comments() {
  while (pos_ < input_.size()) {
    char c = current();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else if (c == '#') {
      while (pos_ < input_.size() && current() != '\n') advance();
    } else {
      break;
    }
  }
}

Token Lexer::lex() {
  skip_space_and_comments();
  Token tok;
  tok.line = line_;
  tok.column = column_;
  if (pos_ >= input_.size()) {
    tok.type = TokenType::End;
    return tok;
  }
  char c = current();
  switch (c) {
    case '<': return lex_iri();
    case '"': return lex_string();
    case '.': tok.type = TokenType::Dot; advance(); return tok;
    case ';': tok.type = TokenType::Semicolon; advance(); return tok;
    case ',': tok.type = TokenType::Comma; advance(); return tok;
    case '{':
    case '}':
      if (!query_mode_) fail("braces are not part of the annotation grammar", line_, column_);
      tok.type = c == '{' ? TokenType::LBrace : TokenType::RBrace;
      advance();
      return tok;
    case '?':
    case '$': {
      if (!query_mode_) fail("variables are only allowed in query patterns", line_, column_);
      advance();
      while (is_name_char(current())) {
        tok.text += current();
        advance();
      }
      if (tok.text.empty()) fail("empty variable name", tok.line, tok.column);
      tok.type = TokenType::Variable;
      return tok;
    }
    case '@': {
      advance();
      std::string word;
      while (std::isalpha(static_cast<unsigned char>(current()))) {
        word += current();
        advance();
      }
      if (word != "prefix") fail("unsupported directive '@" + word + "'", tok.line, tok.column);
      tok.type = TokenType::PrefixDirective;
      return tok;
    }
    case '[':
    case ']':
    case '(':
    case ')':
      fail(std::string("unsupported construct '") + c + "' (blank nodes and collections)",
           line_, column_);
    default:
      break;
  }
  if (is_digit(c) || ((c == '+' || c == '-') && is_digit(at(1)))) return lex_number();
  if (c == '_' && at(1) == ':') fail("blank node labels are not supported", line_, column_);
  if (is_name_char(c) || c == ':') return lex_word();
  fail(std::string("unexpected character '") + c + "'", line_, column_);
}

Token Lexer::lex_iri() {
  Token tok;
  tok.type = TokenType::IriRef;
  tok.line = line_;
  tok.column = column_;
  advance();  // '<'
  while (true) {
    if (pos_ >= input_.size()) fail("unterminated IRI", tok.line, tok.column);
    char c = current();
    if (c == '>') break;
    if (c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`' ||
        c == '\\' || std::isspace(static_cast<unsigned char>(c))) {
      fail(std::string("invalid character in IRI '") + c + "'", line_, column_);
    }
    tok.text += c;
    advance();
  }
  advance();  // '>'
  return tok;
}

Token Lexer::lex_string() {
  Token tok;
  tok.type = TokenType::String;
  tok.line = line_;
  tok.column = column_;
  if (at(1) == '"' && at(2) == '"') fail("long string literals are not supported", line_, column_);
  advance();  // opening quote
  while (true) {
    if (pos_ >= input_.size() || current() == '\n') {
      fail("unterminated string literal", tok.line, tok.column);
    }
    char c = current();
    if (c == '"') break;
    if (c == '\\') {
      advance();
      switch (current()) {
        case '"': tok.text += '"'; break;
        case '\\': tok.text += '\\'; break;
        case 'n': tok.text += '\n'; break;
        case 'r': tok.text += '\r'; break;
        case 't': tok.text += '\t'; break;
        default: fail("unsupported escape sequence", line_, column_);
      }
      advance();
      continue;
    }
    tok.text += c;
    advance();
  }
  advance();  // closing quote
  if (current() == '@' || current() == '^') {
    fail("language tags and datatypes are not supported", line_, column_);
  }
  return tok;
}

Token Lexer::lex_number() {
  Token tok;
  tok.type = TokenType::Integer;
  tok.line = line_;
  tok.column = column_;
  std::string lexeme;
  if (current() == '+' || current() == '-') {
    lexeme += current();
    advance();
  }
  while (is_digit(current())) {
    lexeme += current();
    advance();
  }
  if ((current() == '.' && is_digit(at(1))) || current() == 'e' || current() == 'E') {
    fail("decimal and double literals are not supported", tok.line, tok.column);
  }
  if (is_name_char(current())) fail("malformed integer literal", tok.line, tok.column);
  std::int64_t value = 0;
  const char* first = lexeme.data() + (lexeme[0] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, lexeme.data() + lexeme.size(), value);
  if (ec != std::errc() || ptr != lexeme.data() + lexeme.size()) {
    fail("integer literal out of range", tok.line, tok.column);
  }
  tok.text = std::to_string(value);
  return tok;
}

Token Lexer::lex_word() {
  Token tok;
  tok.line = line_;
  tok.column = column_;
  std::string head;
  // A '.' belongs to a name only when another name character follows it.
  auto read_name = [&](std::string& out, bool allow_colon) {
    while (true) {
      char c = current();
      if (is_name_char(c) || (allow_colon && c == ':')) {
        out += c;
        advance();
      } else if (c == '.' && (is_name_char(at(1)))) {
        out += c;
        advance();
      } else {
        break;
      }
    }
  };
  read_name(head, false);
  if (current() == ':') {
    advance();
    tok.type = TokenType::PrefixedName;
    tok.prefix = head;
    read_name(tok.text, true);
    return tok;
  }
  if (head == "a") {
    tok.type = TokenType::KeywordA;
    return tok;
  }
  if (query_mode_) {
    std::string upper;
    for (char c : head) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "FILTER") {
      tok.type = TokenType::Filter;
      return tok;
    }
    if (upper == "EXISTS") {
      tok.type = TokenType::Exists;
      return tok;
    }
  }
  fail("unexpected bare word '" + head + "'", tok.line, tok.column);
}

}  // namespace detail

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenType;

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : lexer_(text, false) {}

  TurtleDocument parse() {
    while (lexer_.peek().type != TokenType::End) {
      if (lexer_.peek().type == TokenType::PrefixDirective) {
        parse_prefix();
      } else {
        parse_statement();
      }
    }
    return std::move(doc_);
  }

 private:
  void expect(TokenType type, const char* what) {
    Token tok = lexer_.next();
    if (tok.type != type) lexer_.fail(std::string("expected ") + what, tok.line, tok.column);
  }

  void parse_prefix() {
    lexer_.next();
    Token name = lexer_.next();
    if (name.type != TokenType::PrefixedName || !name.text.empty()) {
      lexer_.fail("expected prefix name ending in ':'", name.line, name.column);
    }
    Token iri = lexer_.next();
    if (iri.type != TokenType::IriRef) lexer_.fail("expected namespace IRI", iri.line, iri.column);
    expect(TokenType::Dot, "'.' after @prefix");
    doc_.prefixes[name.prefix] = iri.text;
  }

  Term resolve(const Token& tok) {
    auto it = doc_.prefixes.find(tok.prefix);
    if (it == doc_.prefixes.end()) {
      throw ParseError(ErrorKind::UndeclaredPrefix, "prefix '" + tok.prefix + ":' is not declared",
                       tok.line, tok.column);
    }
    return Term::iri(it->second + tok.text);
  }

  Term parse_resource(const Token& tok, const char* role) {
    if (tok.type == TokenType::IriRef) return Term::iri(tok.text);
    if (tok.type == TokenType::PrefixedName) return resolve(tok);
    lexer_.fail(std::string("expected IRI or prefixed name as ") + role, tok.line, tok.column);
  }

  Term parse_verb() {
    Token tok = lexer_.next();
    if (tok.type == TokenType::KeywordA) return Term::iri(vocab::kRdfType);
    return parse_resource(tok, "predicate");
  }

  Term parse_object() {
    Token tok = lexer_.next();
    switch (tok.type) {
      case TokenType::Integer: return Term{TermKind::Integer, tok.text};
      case TokenType::String: return Term::string(tok.text);
      default: return parse_resource(tok, "object");
    }
  }

  void parse_statement() {
    Term subject = parse_resource(lexer_.next(), "subject");
    while (true) {
      Term predicate = parse_verb();
      while (true) {
        doc_.triples.insert(Triple{subject, predicate, parse_object()});
        if (lexer_.peek().type != TokenType::Comma) break;
        lexer_.next();
      }
      Token sep = lexer_.next();
      if (sep.type == TokenType::Dot) return;
      if (sep.type != TokenType::Semicolon) {
        lexer_.fail("expected ';', ',' or '.'", sep.line, sep.column);
      }
      // trailing ';' before the terminating '.'
      while (lexer_.peek().type == TokenType::Semicolon) lexer_.next();
      if (lexer_.peek().type == TokenType::Dot) {
        lexer_.next();
        return;
      }
    }
  }

  Lexer lexer_;
  TurtleDocument doc_;
};

}  // namespace

TurtleDocument parse_turtle_document(std::string_view text) { return TurtleParser(text).parse(); }

TripleSet parse_turtle_subset(std::string_view text) { return parse_turtle_document(text).triples; }

std::string serialize_turtle(const TripleSet& triples) {
  std::string out;
  const Term* subject = nullptr;
  for (const auto& t : triples) {
    if (subject && *subject == t.subject) {
      out += " ;\n  ";
    } else {
      if (subject) out += " .\n";
      subject = &t.subject;
      out += t.subject.to_string() + "\n  ";
    }
    out += t.predicate.to_string() + " " + t.object.to_string();
  }
  if (subject) out += " .\n";
  return out;
}

}  // namespace sbinet
