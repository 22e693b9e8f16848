#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maml/script/ast.hpp"

namespace maml::script {

// Lowered, target-agnostic event wiring. Each `on` block becomes one Wiring
// entry; each statement becomes one Op.

struct ValueExpr {
  enum class Kind { Literal, Val };
  Kind kind = Kind::Literal;
  std::string text;  // literal text, or the element id to read

  bool operator==(const ValueExpr&) const = default;
};

enum class OpCode { Show, Hide, Swap };

std::string_view to_string(OpCode op);

struct Op {
  OpCode code = OpCode::Show;
  std::string target;
  ValueExpr value;  // Swap only

  bool operator==(const Op&) const = default;
};

struct Wiring {
  ListenerEvent event = ListenerEvent::Click;
  std::string subject;          // empty for timer
  double interval_seconds = 0;  // timer only
  std::optional<std::string> key;
  std::vector<Op> ops;

  bool operator==(const Wiring&) const = default;
};

struct EventWiring {
  std::vector<Wiring> entries;

  std::size_t op_count() const;
  bool operator==(const EventWiring&) const = default;
};

// Expects an AST that passed check_script.
EventWiring lower_script(const ScriptAst& ast);

// Compact table consumed by the page runtime:
//   [{"on":"click","id":"button1","do":[["show","image2"],["swap",{"val":"input3"},"text3"]]},
//    {"on":"timer","every":5,"do":[...]}, {"on":"keydown","id":"f","key":"Enter","do":[...]}]
// A literal swap value is a plain string: ["swap","Done","text3"].
std::string wiring_table_json(const EventWiring& wiring);

// Human-readable IR dump, e.g. "click button1: SHOW(image2) SWAP(VAL(input3),text3)".
std::string dump(const EventWiring& wiring);

}  // namespace maml::script
