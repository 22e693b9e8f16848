#include <cctype>
#include <charconv>
#include <cmath>

#include "maml/script/parser.hpp"

namespace maml::script {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token tok;
      tok.pos = pos_;
      if (at_end()) {
        out.push_back(std::move(tok));
        return out;
      }
      char c = peek();
      switch (c) {
        case '(': tok.kind = TokenKind::LParen; advance(); break;
        case ')': tok.kind = TokenKind::RParen; advance(); break;
        case '{': tok.kind = TokenKind::LBrace; advance(); break;
        case '}': tok.kind = TokenKind::RBrace; advance(); break;
        case ',': tok.kind = TokenKind::Comma; advance(); break;
        case ';': tok.kind = TokenKind::Semicolon; advance(); break;
        case '"': lex_string(tok); break;
        default:
          if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            lex_ident(tok);
          } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+') {
            lex_number(tok);
          } else {
            throw ScriptError(ScriptErrc::LexError, pos_, std::string("unexpected character '") + c + "'");
          }
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_.offset + ahead < src_.size() ? src_[pos_.offset + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void lex_ident(Token& tok) {
    tok.kind = TokenKind::Ident;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      tok.text += peek();
      advance();
    }
  }

  void lex_number(Token& tok) {
    tok.kind = TokenKind::Number;
    std::size_t start = pos_.offset;
    if (peek() == '+' || peek() == '-') advance();
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) advance();
    if (peek() == 'e' || peek() == 'E') {
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    tok.text = std::string(src_.substr(start, pos_.offset - start));
    const char* first = tok.text.data();
    if (!tok.text.empty() && tok.text[0] == '+') ++first;
    const char* last = tok.text.data() + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, tok.number);
    if (ec != std::errc() || ptr != last || !std::isfinite(tok.number))
      throw ScriptError(ScriptErrc::LexError, tok.pos, "malformed number \"" + tok.text + "\"");
  }

  void append_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  unsigned read_hex4() {
    unsigned value = 0;
    for (int i = 0; i < 4; ++i) {
      char h = peek();
      if (!std::isxdigit(static_cast<unsigned char>(h)))
        throw ScriptError(ScriptErrc::LexError, pos_, "bad \\u escape");
      value = value * 16 + static_cast<unsigned>(std::isdigit(static_cast<unsigned char>(h))
                                                     ? h - '0'
                                                     : (std::tolower(static_cast<unsigned char>(h)) - 'a' + 10));
      advance();
    }
    return value;
  }

  void lex_string(Token& tok) {
    tok.kind = TokenKind::String;
    advance();  // opening quote
    for (;;) {
      if (at_end()) throw ScriptError(ScriptErrc::LexError, tok.pos, "unterminated string");
      char c = peek();
      if (c == '"') {
        advance();
        return;
      }
      if (c == '\n') throw ScriptError(ScriptErrc::LexError, pos_, "newline in string");
      if (c != '\\') {
        tok.text += c;
        advance();
        continue;
      }
      advance();
      if (at_end()) throw ScriptError(ScriptErrc::LexError, tok.pos, "unterminated string");
      char e = peek();
      advance();
      switch (e) {
        case '"': tok.text += '"'; break;
        case '\\': tok.text += '\\'; break;
        case '/': tok.text += '/'; break;
        case 'b': tok.text += '\b'; break;
        case 'f': tok.text += '\f'; break;
        case 'n': tok.text += '\n'; break;
        case 'r': tok.text += '\r'; break;
        case 't': tok.text += '\t'; break;
        case 'u': {
          unsigned cp = read_hex4();
          if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (peek() != '\\' || peek(1) != 'u') throw ScriptError(ScriptErrc::LexError, pos_, "lone surrogate");
            advance();
            advance();
            unsigned low = read_hex4();
            if (low < 0xDC00 || low > 0xDFFF) throw ScriptError(ScriptErrc::LexError, pos_, "bad surrogate pair");
            cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
          } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
            throw ScriptError(ScriptErrc::LexError, pos_, "lone surrogate");
          }
          append_utf8(tok.text, cp);
          break;
        }
        default:
          throw ScriptError(ScriptErrc::LexError, pos_, std::string("unknown escape \\") + e);
      }
    }
  }

  std::string_view src_;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view code) { return Lexer(code).run(); }

}  // namespace maml::script
