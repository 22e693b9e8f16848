#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "maml/script/wiring.hpp"
#include "maml/transpile/scale.hpp"

namespace maml::transpile {

// Upper bound on the embedded runtime library, in bytes.
inline constexpr std::size_t kRuntimeBudgetBytes = 6 * 1024;

// The shared in-page runtime: a single function expression taking
// (original viewport width, authored [x,w] table, wiring table). It installs
// window.MAML = {show, hide, swap, valOf, step} and nothing else globally.
std::string_view runtime_library();

// Runtime library applied to this page's tables; the body of the final
// <script> element.
std::string render_runtime(const ScaleModel& scale, const script::EventWiring& wiring);

// "[[x,w],...]" as embedded in the page.
std::string authored_table_json(const ScaleModel& scale);

}  // namespace maml::transpile
