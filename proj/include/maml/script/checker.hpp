#pragma once

#include <vector>

#include "maml/core/diagnostic.hpp"
#include "maml/core/document.hpp"
#include "maml/script/ast.hpp"

namespace maml::script {

// Resolves every id the script mentions against `doc` and checks that each
// trigger is applied to an element kind that supports it:
//   val  -> text-field, dropdown
//   swap -> text, button, text-field (target)
//   show/hide -> any renderable element
// `change` on an element that never changes value is reported as a warning.
std::vector<Diagnostic> check_script(const ScriptAst& ast, const Document& doc);

}  // namespace maml::script
