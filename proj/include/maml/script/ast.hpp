#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maml::script {

enum class ListenerEvent { Click, Change, Keydown, Reach, Timer };
enum class Trigger { Val, Show, Hide, Swap };

std::string_view to_string(ListenerEvent event);
std::string_view to_string(Trigger trigger);
std::optional<ListenerEvent> listener_from_name(std::string_view name);
std::optional<Trigger> trigger_from_name(std::string_view name);

// Number of arguments each trigger takes.
std::size_t trigger_arity(Trigger trigger);

struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct TriggerCall;

// A string literal, or a nested value-returning call.
struct Argument {
  std::string literal;
  std::vector<TriggerCall> call;  // empty, or exactly one nested call

  bool is_call() const noexcept { return !call.empty(); }
  const TriggerCall& nested() const { return call.front(); }

  bool operator==(const Argument&) const;
};

struct TriggerCall {
  Trigger trigger = Trigger::Show;
  std::vector<Argument> args;
  SourcePos pos;

  // Structural equality; source positions are ignored.
  bool operator==(const TriggerCall& other) const { return trigger == other.trigger && args == other.args; }
};

inline bool Argument::operator==(const Argument& other) const {
  return literal == other.literal && call == other.call;
}

struct Listener {
  ListenerEvent event = ListenerEvent::Click;
  std::string subject;             // element id; empty for timer
  double interval_seconds = 0;     // timer only
  std::optional<std::string> key;  // keydown only
  std::vector<TriggerCall> body;
  SourcePos pos;

  bool operator==(const Listener& other) const {
    return event == other.event && subject == other.subject && interval_seconds == other.interval_seconds &&
           key == other.key && body == other.body;
  }
};

struct ScriptAst {
  std::vector<Listener> listeners;

  std::size_t statement_count() const;
  bool operator==(const ScriptAst&) const = default;
};

// Canonical MAMLScript text: one listener per line, no insignificant spaces.
std::string to_source(const ScriptAst& ast);

}  // namespace maml::script
