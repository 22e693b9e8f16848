#include "maml/script/parser.hpp"

#include <array>
#include <charconv>

#include "maml/format/json_text.hpp"

namespace maml::script {
namespace {

constexpr std::array<std::string_view, 5> kListenerNames = {"click", "change", "keydown", "reach", "timer"};
constexpr std::array<std::string_view, 4> kTriggerNames = {"val", "show", "hide", "swap"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ScriptAst run() {
    ScriptAst ast;
    while (cur().kind != TokenKind::End) ast.listeners.push_back(listener());
    return ast;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] void fail(std::string expected) const {
    throw ScriptError(ScriptErrc::ParseError, cur().pos, std::move(expected));
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (cur().kind != kind) fail(std::string(what));
    return take();
  }

  Listener listener() {
    Listener l;
    l.pos = cur().pos;
    if (cur().kind != TokenKind::Ident || cur().text != "on") fail("\"on\"");
    take();
    expect(TokenKind::LParen, "'('");
    const Token& event_tok = expect(TokenKind::String, "listener name string");
    auto event = listener_from_name(event_tok.text);
    if (!event) throw ScriptError(ScriptErrc::UnknownListener, event_tok.pos, event_tok.text);
    l.event = *event;

    std::vector<Token> args;
    while (cur().kind == TokenKind::Comma) {
      take();
      if (cur().kind != TokenKind::String && cur().kind != TokenKind::Number) fail("string or number");
      args.push_back(take());
    }
    expect(TokenKind::RParen, "')'");
    bind_listener_args(l, args, event_tok);

    expect(TokenKind::LBrace, "'{'");
    while (cur().kind != TokenKind::RBrace) {
      if (cur().kind == TokenKind::End) fail("'}'");
      l.body.push_back(statement());
    }
    take();
    return l;
  }

  void bind_listener_args(Listener& l, const std::vector<Token>& args, const Token& event_tok) {
    const std::size_t want = l.event == ListenerEvent::Keydown ? 2 : 1;
    if (args.size() != want) throw ScriptError(ScriptErrc::ArityError, event_tok.pos, event_tok.text);

    if (l.event == ListenerEvent::Timer) {
      if (args[0].kind != TokenKind::Number || !(args[0].number > 0))
        throw ScriptError(ScriptErrc::ParseError, args[0].pos, "positive number of seconds");
      l.interval_seconds = args[0].number;
      return;
    }
    if (args[0].kind != TokenKind::String)
      throw ScriptError(ScriptErrc::ParseError, args[0].pos, "element id string");
    l.subject = args[0].text;
    if (l.event == ListenerEvent::Keydown) {
      if (args[1].kind != TokenKind::String || args[1].text.empty())
        throw ScriptError(ScriptErrc::ParseError, args[1].pos, "key name string");
      l.key = args[1].text;
    }
  }

  TriggerCall statement() {
    TriggerCall c = call(false);
    if (c.trigger == Trigger::Val) throw ScriptError(ScriptErrc::BareValueTrigger, c.pos, "val");
    expect(TokenKind::Semicolon, "';'");
    return c;
  }

  TriggerCall call(bool nested) {
    TriggerCall c;
    c.pos = cur().pos;
    const Token& name = expect(TokenKind::Ident, "trigger name");
    auto trigger = trigger_from_name(name.text);
    if (!trigger) throw ScriptError(ScriptErrc::UnknownTrigger, name.pos, name.text);
    if (nested && *trigger != Trigger::Val)
      throw ScriptError(ScriptErrc::NestedNonValueTrigger, name.pos, name.text);
    c.trigger = *trigger;

    expect(TokenKind::LParen, "'('");
    std::vector<SourcePos> arg_pos;
    if (cur().kind != TokenKind::RParen) {
      for (;;) {
        arg_pos.push_back(cur().pos);
        c.args.push_back(argument(!nested));
        if (cur().kind != TokenKind::Comma) break;
        take();
      }
    }
    expect(TokenKind::RParen, "')'");

    if (c.args.size() != trigger_arity(c.trigger)) throw ScriptError(ScriptErrc::ArityError, name.pos, name.text);
    // Only swap's content slot accepts a nested value; every other slot is an id.
    for (std::size_t a = 0; a < c.args.size(); ++a) {
      bool content_slot = c.trigger == Trigger::Swap && a == 0;
      if (!content_slot && c.args[a].is_call())
        throw ScriptError(ScriptErrc::ParseError, arg_pos[a], "element id string");
    }
    return c;
  }

  // Calls nest at most one level, so a nested call's arguments are never
  // parsed as calls; this also bounds recursion on hostile input.
  Argument argument(bool allow_call) {
    Argument a;
    if (cur().kind == TokenKind::String) {
      a.literal = take().text;
    } else if (cur().kind == TokenKind::Ident && allow_call) {
      a.call.push_back(call(true));
    } else {
      fail(allow_call ? "string or trigger call" : "element id string");
    }
    return a;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

void append_call(std::string& out, const TriggerCall& c) {
  out += to_string(c.trigger);
  out += '(';
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) out += ',';
    if (c.args[i].is_call()) {
      append_call(out, c.args[i].nested());
    } else {
      json_text::append_string(out, c.args[i].literal);
    }
  }
  out += ')';
}

}  // namespace

std::string_view to_string(ListenerEvent event) { return kListenerNames[static_cast<std::size_t>(event)]; }
std::string_view to_string(Trigger trigger) { return kTriggerNames[static_cast<std::size_t>(trigger)]; }

std::optional<ListenerEvent> listener_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kListenerNames.size(); ++i)
    if (kListenerNames[i] == name) return static_cast<ListenerEvent>(i);
  return std::nullopt;
}

std::optional<Trigger> trigger_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTriggerNames.size(); ++i)
    if (kTriggerNames[i] == name) return static_cast<Trigger>(i);
  return std::nullopt;
}

std::size_t trigger_arity(Trigger trigger) { return trigger == Trigger::Swap ? 2 : 1; }

std::string_view to_string(ScriptErrc code) {
  switch (code) {
    case ScriptErrc::LexError: return "LexError";
    case ScriptErrc::ParseError: return "ParseError";
    case ScriptErrc::ArityError: return "ArityError";
    case ScriptErrc::UnknownListener: return "UnknownListener";
    case ScriptErrc::UnknownTrigger: return "UnknownTrigger";
    case ScriptErrc::NestedNonValueTrigger: return "NestedNonValueTrigger";
    case ScriptErrc::BareValueTrigger: return "BareValueTrigger";
  }
  return "ScriptError";
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::String: return "string";
    case TokenKind::Number: return "number";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::End: return "end of script";
  }
  return "token";
}

namespace {
std::string describe(ScriptErrc code, const SourcePos& pos, const std::string& detail) {
  std::string msg = std::string(to_string(code)) + " at " + std::to_string(pos.line) + ":" +
                    std::to_string(pos.column) + ": ";
  switch (code) {
    case ScriptErrc::ParseError: return msg + "expected " + detail;
    case ScriptErrc::ArityError: return msg + "wrong number of arguments to \"" + detail + "\"";
    case ScriptErrc::UnknownListener: return msg + "unknown listener \"" + detail + "\"";
    case ScriptErrc::UnknownTrigger: return msg + "unknown trigger \"" + detail + "\"";
    case ScriptErrc::NestedNonValueTrigger: return msg + "\"" + detail + "\" does not return a value";
    case ScriptErrc::BareValueTrigger: return msg + "\"" + detail + "\" cannot be used as a statement";
    case ScriptErrc::LexError: return msg + detail;
  }
  return msg + detail;
}
}  // namespace

ScriptError::ScriptError(ScriptErrc code, SourcePos pos, std::string detail)
    : std::runtime_error(describe(code, pos, detail)), code_(code), pos_(pos), detail_(std::move(detail)) {}

ScriptAst parse_script(std::string_view code) { return Parser(tokenize(code)).run(); }

std::size_t ScriptAst::statement_count() const {
  std::size_t n = 0;
  for (const auto& l : listeners) n += l.body.size();
  return n;
}

std::string to_source(const ScriptAst& ast) {
  std::string out;
  for (const auto& l : ast.listeners) {
    out += "on(";
    json_text::append_string(out, to_string(l.event));
    out += ',';
    if (l.event == ListenerEvent::Timer) {
      json_text::append_number(out, l.interval_seconds);
    } else {
      json_text::append_string(out, l.subject);
    }
    if (l.key) {
      out += ',';
      json_text::append_string(out, *l.key);
    }
    out += "){";
    for (const auto& stmt : l.body) {
      append_call(out, stmt);
      out += ';';
    }
    out += "}\n";
  }
  return out;
}

}  // namespace maml::script
