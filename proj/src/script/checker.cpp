#include "maml/script/checker.hpp"

#include <string>

namespace maml::script {
namespace {

class Checker {
 public:
  Checker(const Document& doc, std::vector<Diagnostic>& out) : doc_(doc), out_(out) {}

  void listener(const Listener& l) {
    if (l.event != ListenerEvent::Timer) {
      const Element* subject = resolve(l.subject, "listener \"" + std::string(to_string(l.event)) + "\"");
      if (subject && l.event == ListenerEvent::Change && subject->kind() != ElementKind::TextField &&
          subject->kind() != ElementKind::Dropdown) {
        Diagnostic d = make_warning("TypeMismatch", "change listener on \"" + l.subject + "\" (a " +
                                                        std::string(type_name(subject->kind())) +
                                                        ") never fires");
        d.subject = l.subject;
        out_.push_back(std::move(d));
      }
    }
    for (const auto& stmt : l.body) call(stmt);
  }

 private:
  void call(const TriggerCall& c) {
    switch (c.trigger) {
      case Trigger::Val: {
        const Element* el = resolve(c.args[0].literal, "val");
        if (el && el->kind() != ElementKind::TextField && el->kind() != ElementKind::Dropdown)
          mismatch(c, c.args[0].literal, *el, "val reads text-field or dropdown values");
        break;
      }
      case Trigger::Show:
      case Trigger::Hide:
        resolve(c.args[0].literal, std::string(to_string(c.trigger)));
        break;
      case Trigger::Swap: {
        if (c.args[0].is_call()) call(c.args[0].nested());
        const Element* el = resolve(c.args[1].literal, "swap");
        if (el && el->kind() != ElementKind::Text && el->kind() != ElementKind::Button &&
            el->kind() != ElementKind::TextField)
          mismatch(c, c.args[1].literal, *el, "swap targets text, button or text-field elements");
        break;
      }
    }
  }

  const Element* resolve(const std::string& id, const std::string& where) {
    const Element* el = doc_.find(id);
    if (!el) {
      Diagnostic d = make_error("UnresolvedId", "unresolved element id \"" + id + "\" in " + where);
      d.subject = id;
      d.property = "code";
      out_.push_back(std::move(d));
    }
    return el;
  }

  void mismatch(const TriggerCall& c, const std::string& id, const Element& el, const char* rule) {
    Diagnostic d = make_error("TypeMismatch", std::string(to_string(c.trigger)) + "(\"" + id + "\"): \"" + id +
                                                  "\" is a " + std::string(type_name(el.kind())) + "; " + rule);
    d.subject = id;
    d.property = "code";
    out_.push_back(std::move(d));
  }

  const Document& doc_;
  std::vector<Diagnostic>& out_;
};

}  // namespace

std::vector<Diagnostic> check_script(const ScriptAst& ast, const Document& doc) {
  std::vector<Diagnostic> out;
  Checker checker(doc, out);
  for (const auto& l : ast.listeners) checker.listener(l);
  return out;
}

}  // namespace maml::script
