#include "maml/format/json_text.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

namespace maml::json_text {

void append_number(std::string& out, double value) {
  if (value == 0) {
    out += '0';  // also folds -0
    return;
  }
  char buf[32];
  std::to_chars_result res;
  if (value == std::floor(value) && std::fabs(value) <= 9007199254740992.0) {
    res = std::to_chars(buf, buf + sizeof buf, static_cast<std::int64_t>(value));
  } else {
    res = std::to_chars(buf, buf + sizeof buf, value);
  }
  out.append(buf, res.ptr);
}

std::string number(double value) {
  std::string s;
  append_number(s, value);
  return s;
}

namespace {
void append_escaped(std::string& out, std::string_view value, bool script_safe) {
  static constexpr char kHex[] = "0123456789abcdef";
  out += '"';
  for (std::size_t i = 0; i < value.size(); ++i) {
    char c = value[i];
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '/':
        if (script_safe && i > 0 && value[i - 1] == '<') {
          out += "\\/";
        } else {
          out += '/';
        }
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += "\\u00";
          out += kHex[(c >> 4) & 0xF];
          out += kHex[c & 0xF];
        } else {
          out += c;
        }
    }
  }
  out += '"';
}
}  // namespace

void append_string(std::string& out, std::string_view value) { append_escaped(out, value, false); }

void append_script_safe_string(std::string& out, std::string_view value) { append_escaped(out, value, true); }

}  // namespace maml::json_text
