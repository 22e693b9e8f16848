#include "semantics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace maml::testing {
namespace {

using script::ListenerEvent;

// Timer firings in (time, registration order) for the window (from, to].
std::vector<std::size_t> timer_schedule(const std::vector<std::pair<std::size_t, double>>& timers, long long from,
                                        long long to) {
  std::vector<std::pair<long long, std::size_t>> fires;
  for (const auto& [index, seconds] : timers) {
    long long period = std::llround(seconds * 1000);
    if (period <= 0) continue;
    for (long long t = (from / period + 1) * period; t <= to; t += period) fires.emplace_back(t, index);
  }
  std::sort(fires.begin(), fires.end());
  std::vector<std::size_t> out;
  for (const auto& f : fires) out.push_back(f.second);
  return out;
}

bool accepts_input(ElementKind kind) { return kind == ElementKind::TextField || kind == ElementKind::Dropdown; }

// --- AST interpreter -------------------------------------------------------

struct AstMachine {
  PageState& state;

  // Returns false when the value cannot be produced (missing element).
  bool eval(const script::Argument& arg, std::string& out) {
    if (!arg.is_call()) {
      out = arg.literal;
      return true;
    }
    const script::TriggerCall& call = arg.nested();
    const std::string& id = call.args[0].literal;
    auto it = state.elements.find(id);
    if (it == state.elements.end()) {
      state.warnings.push_back("missing " + id);
      return false;
    }
    out = it->second.content;
    return true;
  }

  ElementState* target(const std::string& id) {
    auto it = state.elements.find(id);
    if (it == state.elements.end()) {
      state.warnings.push_back("missing " + id);
      return nullptr;
    }
    return &it->second;
  }

  void exec(const script::TriggerCall& call) {
    switch (call.trigger) {
      case script::Trigger::Show:
        if (auto* el = target(call.args[0].literal)) el->visible = true;
        break;
      case script::Trigger::Hide:
        if (auto* el = target(call.args[0].literal)) el->visible = false;
        break;
      case script::Trigger::Swap: {
        std::string value;
        if (!eval(call.args[0], value)) break;
        if (auto* el = target(call.args[1].literal)) el->content = value;
        break;
      }
      case script::Trigger::Val:
        break;  // has no effect as a statement
    }
  }

  void run(const script::Listener& l) {
    for (const auto& stmt : l.body) exec(stmt);
  }
};

// --- IR replay -------------------------------------------------------------

void apply(PageState& state, const script::Op& op) {
  auto lookup = [&](const std::string& id) -> ElementState* {
    auto it = state.elements.find(id);
    if (it != state.elements.end()) return &it->second;
    state.warnings.push_back("missing " + id);
    return nullptr;
  };
  if (op.code == script::OpCode::Swap) {
    std::string value = op.value.text;
    if (op.value.kind == script::ValueExpr::Kind::Val) {
      const ElementState* source = lookup(op.value.text);
      if (!source) return;
      value = source->content;
    }
    if (auto* el = lookup(op.target)) el->content = value;
    return;
  }
  if (auto* el = lookup(op.target)) el->visible = op.code == script::OpCode::Show;
}

}  // namespace

PageState initial_state(const Document& doc) {
  PageState state;
  for (const auto& el : doc.elements) {
    auto id = el.id();
    if (!id || el.kind() == ElementKind::Script) continue;
    ElementState s;
    s.kind = el.kind();
    s.visible = el.displayed();
    if (el.kind() == ElementKind::Text || el.kind() == ElementKind::Button) {
      s.content = *el.string_prop("text");
    } else if (el.kind() == ElementKind::Dropdown) {
      s.content = el.list_prop("options")->front();
    }
    state.elements.emplace(std::string(*id), std::move(s));
  }
  return state;
}

std::vector<Event> random_events(Rng& rng, const Document& doc, int count) {
  std::vector<std::string> ids;
  std::map<std::string, const Element*> by_id;
  for (const auto& el : doc.elements) {
    if (auto id = el.id(); id && el.kind() != ElementKind::Script) {
      ids.emplace_back(*id);
      by_id[std::string(*id)] = &el;
    }
  }
  static const char* const keys[] = {"Enter", "Escape", "a", "ArrowUp", " ", "b"};
  std::vector<Event> events;
  for (int i = 0; i < count; ++i) {
    Event e;
    e.kind = static_cast<Event::Kind>(uniform_int(rng, 0, 4));
    if (e.kind != Event::Kind::Tick) {
      if (ids.empty()) {
        e.kind = Event::Kind::Tick;
      } else {
        e.id = ids[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ids.size()) - 1))];
      }
    }
    switch (e.kind) {
      case Event::Kind::Input: {
        const Element* el = by_id[e.id];
        if (el->kind() == ElementKind::Dropdown) {
          const auto& options = *el->list_prop("options");
          e.value = options[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(options.size()) - 1))];
        } else {
          e.value = random_text(rng, 4);
        }
        break;
      }
      case Event::Kind::Keydown:
        e.value = keys[uniform_int(rng, 0, 5)];
        break;
      case Event::Kind::Tick:
        e.millis = 250LL * uniform_int(rng, 1, 12);
        break;
      default:
        break;
    }
    events.push_back(std::move(e));
  }
  return events;
}

void interpret(const script::ScriptAst& ast, PageState& state, const Event& event) {
  AstMachine m{state};
  const auto& ls = ast.listeners;
  switch (event.kind) {
    case Event::Kind::Click:
      for (const auto& l : ls)
        if (l.event == ListenerEvent::Click && l.subject == event.id) m.run(l);
      break;
    case Event::Kind::Input: {
      auto it = state.elements.find(event.id);
      if (it == state.elements.end() || !accepts_input(it->second.kind)) break;
      it->second.content = event.value;
      for (const auto& l : ls)
        if (l.event == ListenerEvent::Change && l.subject == event.id) m.run(l);
      break;
    }
    case Event::Kind::Keydown:
      for (const auto& l : ls)
        if (l.event == ListenerEvent::Keydown && l.subject == event.id && l.key == event.value) m.run(l);
      break;
    case Event::Kind::Scroll:
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].event != ListenerEvent::Reach || ls[i].subject != event.id) continue;
        if (!state.reach_fired.insert(i).second) continue;
        m.run(ls[i]);
      }
      break;
    case Event::Kind::Tick: {
      std::vector<std::pair<std::size_t, double>> timers;
      for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i].event == ListenerEvent::Timer) timers.emplace_back(i, ls[i].interval_seconds);
      long long from = state.clock_ms;
      state.clock_ms += event.millis;
      for (std::size_t i : timer_schedule(timers, from, state.clock_ms)) m.run(ls[i]);
      break;
    }
  }
}

void replay(const script::EventWiring& wiring, PageState& state, const Event& event) {
  const auto& es = wiring.entries;
  auto run = [&](const script::Wiring& w) {
    for (const auto& op : w.ops) apply(state, op);
  };
  auto matches = [&](const script::Wiring& w, ListenerEvent kind) { return w.event == kind && w.subject == event.id; };
  switch (event.kind) {
    case Event::Kind::Click:
      for (const auto& w : es)
        if (matches(w, ListenerEvent::Click)) run(w);
      break;
    case Event::Kind::Input: {
      auto it = state.elements.find(event.id);
      if (it == state.elements.end() || !accepts_input(it->second.kind)) break;
      it->second.content = event.value;
      for (const auto& w : es)
        if (matches(w, ListenerEvent::Change)) run(w);
      break;
    }
    case Event::Kind::Keydown:
      for (const auto& w : es)
        if (matches(w, ListenerEvent::Keydown) && w.key == event.value) run(w);
      break;
    case Event::Kind::Scroll:
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (!matches(es[i], ListenerEvent::Reach) || state.reach_fired.count(i)) continue;
        state.reach_fired.insert(i);
        run(es[i]);
      }
      break;
    case Event::Kind::Tick: {
      std::vector<std::pair<std::size_t, double>> timers;
      for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].event == ListenerEvent::Timer) timers.emplace_back(i, es[i].interval_seconds);
      long long from = state.clock_ms;
      state.clock_ms += event.millis;
      for (std::size_t i : timer_schedule(timers, from, state.clock_ms)) run(es[i]);
      break;
    }
  }
}

std::string describe(const Event& e) {
  static const char* const names[] = {"click", "input", "keydown", "scroll", "tick"};
  std::ostringstream out;
  out << names[static_cast<int>(e.kind)];
  if (!e.id.empty()) out << ' ' << e.id;
  if (!e.value.empty()) out << " \"" << e.value << '"';
  if (e.kind == Event::Kind::Tick) out << ' ' << e.millis << "ms";
  return out.str();
}

std::string describe(const PageState& state) {
  std::ostringstream out;
  for (const auto& [id, el] : state.elements)
    out << id << (el.visible ? " shown" : " hidden") << " \"" << el.content << "\"\n";
  out << "clock " << state.clock_ms << "ms, " << state.reach_fired.size() << " reach fired, "
      << state.warnings.size() << " warnings\n";
  return out.str();
}

}  // namespace maml::testing
