#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace maml::testing {

inline std::filesystem::path fixture_path(const std::string& relative) {
  return std::filesystem::path(MAML_FIXTURE_DIR) / relative;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The image line and the click script used throughout the format's own
// documentation, verbatim (whitespace included).
inline constexpr const char* kDocImageLine =
    "{\"type\":\"img\",\"w\":268,\"h\":31,\"x\":336,\"y\":15,\"z\":1,\n"
    " \"src\":\"https://example.com/img/abc.webp\",\n"
    " \"alt\":\"Alternate Text\",\"fit\":\"fill\"}";

inline constexpr const char* kDocClickScript =
    "    on(\"click\", \"button1\") {\n"
    "        show(\"image2\");\n"
    "        hide(\"image1\");\n"
    "        swap(val(\"input3\"), \"text3\");}";

}  // namespace maml::testing
