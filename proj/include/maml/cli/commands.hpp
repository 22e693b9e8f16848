#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace maml::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain failure: invalid input, not canonical, ...
inline constexpr int kExitUsage = 2;    // bad arguments or I/O error

// Runs the `maml` command line. `args` excludes the program name.
//   validate  <in.maml>  [--strict|--lenient]
//   fmt       <in.maml>  [--check] [-o out] [--strict|--lenient]
//   transpile <in.maml>  [-o out.html] [--emit-manifest] [--strict|--lenient]
//   translate <snap.json> [-o out.maml]
//   analyze   <a.html> [b.html] [--json]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace maml::cli
