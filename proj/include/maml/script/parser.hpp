#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maml/script/ast.hpp"

namespace maml::script {

enum class ScriptErrc {
  LexError,
  ParseError,
  ArityError,
  UnknownListener,
  UnknownTrigger,
  NestedNonValueTrigger,
  BareValueTrigger,  // val(...) used as a statement
};

std::string_view to_string(ScriptErrc code);

class ScriptError : public std::runtime_error {
 public:
  ScriptError(ScriptErrc code, SourcePos pos, std::string detail);

  ScriptErrc code() const noexcept { return code_; }
  const SourcePos& pos() const noexcept { return pos_; }
  // The offending name (listener/trigger) or the expected token description.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ScriptErrc code_;
  SourcePos pos_;
  std::string detail_;
};

enum class TokenKind { Ident, String, Number, LParen, RParen, LBrace, RBrace, Comma, Semicolon, End };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // identifier name, unescaped string, or number spelling
  double number = 0;
  SourcePos pos;
};

// Splits MAMLScript into tokens. Throws ScriptError(LexError).
std::vector<Token> tokenize(std::string_view code);

// Parses and shape-checks MAMLScript (listener names and arities, trigger
// names, arities and nesting). Throws ScriptError.
ScriptAst parse_script(std::string_view code);

}  // namespace maml::script
