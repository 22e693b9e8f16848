#pragma once

#include <string>
#include <string_view>

// Compact JSON text emission with a canonical number spelling. Shared by the
// .maml serializer, the script printer and the runtime table emitter.
namespace maml::json_text {

// Integral values within +-2^53 print without a fraction ("268"); everything
// else prints in shortest round-trip form ("12.5").
void append_number(std::string& out, double value);
std::string number(double value);

// JSON string literal; UTF-8 passes through, control characters are escaped.
void append_string(std::string& out, std::string_view value);

// As append_string, but also escapes "</" so the literal can sit inside an
// inline <script> element.
void append_script_safe_string(std::string& out, std::string_view value);

}  // namespace maml::json_text
