#include "maml/script/wiring.hpp"

#include "maml/format/json_text.hpp"

namespace maml::script {

std::string_view to_string(OpCode op) {
  switch (op) {
    case OpCode::Show: return "show";
    case OpCode::Hide: return "hide";
    case OpCode::Swap: return "swap";
  }
  return "?";
}

std::size_t EventWiring::op_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.ops.size();
  return n;
}

EventWiring lower_script(const ScriptAst& ast) {
  EventWiring out;
  out.entries.reserve(ast.listeners.size());
  for (const auto& l : ast.listeners) {
    Wiring w;
    w.event = l.event;
    w.subject = l.subject;
    w.interval_seconds = l.interval_seconds;
    w.key = l.key;
    w.ops.reserve(l.body.size());
    for (const auto& stmt : l.body) {
      Op op;
      switch (stmt.trigger) {
        case Trigger::Show:
          op.code = OpCode::Show;
          op.target = stmt.args[0].literal;
          break;
        case Trigger::Hide:
          op.code = OpCode::Hide;
          op.target = stmt.args[0].literal;
          break;
        case Trigger::Swap: {
          op.code = OpCode::Swap;
          op.target = stmt.args[1].literal;
          const Argument& content = stmt.args[0];
          if (content.is_call()) {
            op.value = {ValueExpr::Kind::Val, content.nested().args[0].literal};
          } else {
            op.value = {ValueExpr::Kind::Literal, content.literal};
          }
          break;
        }
        case Trigger::Val:
          continue;  // rejected by the parser as a statement
      }
      w.ops.push_back(std::move(op));
    }
    out.entries.push_back(std::move(w));
  }
  return out;
}

std::string wiring_table_json(const EventWiring& wiring) {
  using json_text::append_script_safe_string;
  std::string out = "[";
  for (std::size_t i = 0; i < wiring.entries.size(); ++i) {
    const Wiring& w = wiring.entries[i];
    if (i) out += ',';
    out += "{\"on\":";
    append_script_safe_string(out, to_string(w.event));
    if (w.event == ListenerEvent::Timer) {
      out += ",\"every\":";
      json_text::append_number(out, w.interval_seconds);
    } else {
      out += ",\"id\":";
      append_script_safe_string(out, w.subject);
    }
    if (w.key) {
      out += ",\"key\":";
      append_script_safe_string(out, *w.key);
    }
    out += ",\"do\":[";
    for (std::size_t k = 0; k < w.ops.size(); ++k) {
      const Op& op = w.ops[k];
      if (k) out += ',';
      out += '[';
      append_script_safe_string(out, to_string(op.code));
      if (op.code == OpCode::Swap) {
        out += ',';
        if (op.value.kind == ValueExpr::Kind::Val) {
          out += "{\"val\":";
          append_script_safe_string(out, op.value.text);
          out += '}';
        } else {
          append_script_safe_string(out, op.value.text);
        }
      }
      out += ',';
      append_script_safe_string(out, op.target);
      out += ']';
    }
    out += "]}";
  }
  out += ']';
  return out;
}

std::string dump(const EventWiring& wiring) {
  std::string out;
  for (const auto& w : wiring.entries) {
    out += to_string(w.event);
    out += ' ';
    if (w.event == ListenerEvent::Timer) {
      out += json_text::number(w.interval_seconds) + "s";
    } else {
      out += w.subject;
    }
    if (w.key) out += " [" + *w.key + "]";
    out += ':';
    for (const auto& op : w.ops) {
      out += ' ';
      switch (op.code) {
        case OpCode::Show: out += "SHOW(" + op.target + ")"; break;
        case OpCode::Hide: out += "HIDE(" + op.target + ")"; break;
        case OpCode::Swap:
          out += "SWAP(";
          out += op.value.kind == ValueExpr::Kind::Val ? "VAL(" + op.value.text + ")"
                                                       : "LITERAL(" + op.value.text + ")";
          out += "," + op.target + ")";
          break;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace maml::script
