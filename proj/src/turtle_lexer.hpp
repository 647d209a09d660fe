#pragma once

// Tokenizer shared by the annotation-prelude parser and the query-pattern
// parser. Only the constructs of the supported subset produce tokens;
// anything else is a SyntaxError at the offending position.

#include <cstddef>
#include <string>
#include <string_view>

#include "sbinet/error.hpp"

namespace sbinet::detail {

enum class TokenType {
  IriRef,
  PrefixedName,
  PrefixDirective,
  KeywordA,
  Integer,
  String,
  Variable,
  Filter,
  Exists,
  Dot,
  Semicolon,
  Comma,
  LBrace,
  RBrace,
  End,
};

struct Token {
  TokenType type = TokenType::End;
  std::string text;    // IRI body, string value, integer lexeme, variable name
  std::string prefix;  // PrefixedName only
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view input, bool query_mode);

  Token next();
  const Token& peek();

  [[noreturn]] void fail(const std::string& message, std::size_t line,
                         std::size_t column) const;

 private:
  Token lex();
  void skip_space_and_comments();
  char current() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }
  char at(std::size_t offset) const {
    return pos_ + offset < input_.size() ? input_[pos_ + offset] : '\0';
  }
  void advance();

  Token lex_iri();
  Token lex_string();
  Token lex_number();
  Token lex_word();

  std::string_view input_;
  bool query_mode_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool has_peeked_ = false;
  Token peeked_;
};

}  // namespace sbinet::detail
