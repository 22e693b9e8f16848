#include "maml/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <CLI11.hpp>

#include "maml/analyze/html_tree.hpp"
#include "maml/analyze/report.hpp"
#include "maml/format/maml_file.hpp"
#include "maml/translate/snapshot.hpp"
#include "maml/translate/translator.hpp"
#include "maml/transpile/transpiler.hpp"

namespace maml::cli {
namespace {

namespace fs = std::filesystem;

struct IoError {
  std::string message;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{path.string() + ": cannot read file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError{path.string() + ": read error"};
  return std::move(buf).str();
}

void emit(const fs::path& path, std::string_view contents, std::ostream& out) {
  if (path == "-") {
    out << contents;
    return;
  }
  write_file_atomic(path, contents);
}

void report_parse_error(const std::string& file, const ParseError& e, std::ostream& err) {
  for (const auto& d : e.issues()) err << format_diagnostic(file, d) << '\n';
}

void report(const std::string& file, const std::vector<Diagnostic>& diagnostics, std::ostream& err) {
  for (const auto& d : diagnostics) err << format_diagnostic(file, d) << '\n';
}

struct Common {
  std::string input;
  std::string output;
  bool strict = false;
  bool lenient = false;

  ParseOptions parse_options() const {
    ParseOptions opts;
    opts.mode = lenient && !strict ? ValidationMode::Lenient : ValidationMode::Strict;
    return opts;
  }
};

void add_mode_flags(CLI::App* cmd, Common& c) {
  auto* strict = cmd->add_flag("--strict", c.strict, "Reject unknown keys (default)");
  auto* lenient = cmd->add_flag("--lenient", c.lenient, "Drop unknown keys with a warning");
  strict->excludes(lenient);
}

int cmd_validate(const Common& c, std::ostream& err) {
  std::string source = read_file(c.input);
  try {
    auto parsed = parse_document(source, c.parse_options());
    report(c.input, parsed.diagnostics, err);
    return has_errors(parsed.diagnostics) ? kExitFailure : kExitOk;
  } catch (const ParseError& e) {
    report_parse_error(c.input, e, err);
    return kExitFailure;
  }
}

int cmd_fmt(const Common& c, bool check, std::ostream& out, std::ostream& err) {
  std::string source = read_file(c.input);
  std::string formatted;
  try {
    auto parsed = parse_document(source, c.parse_options());
    report(c.input, parsed.diagnostics, err);
    formatted = serialize_document(parsed.document);
  } catch (const ParseError& e) {
    report_parse_error(c.input, e, err);
    return kExitFailure;
  }
  if (check) {
    if (formatted == source) return kExitOk;
    err << c.input << ": not in canonical form\n";
    return kExitFailure;
  }
  fs::path target = c.output.empty() ? fs::path(c.input) : fs::path(c.output);
  if (target != "-" && target == fs::path(c.input) && formatted == source) return kExitOk;
  emit(target, formatted, out);
  return kExitOk;
}

int cmd_transpile(const Common& c, bool emit_manifest, std::ostream& out, std::ostream& err) {
  std::string source = read_file(c.input);
  Document doc;
  try {
    auto parsed = parse_document(source, c.parse_options());
    report(c.input, parsed.diagnostics, err);
    if (has_errors(parsed.diagnostics)) return kExitFailure;
    doc = std::move(parsed.document);
  } catch (const ParseError& e) {
    report_parse_error(c.input, e, err);
    return kExitFailure;
  }

  transpile::HtmlPage page;
  try {
    page = transpile::transpile_document(doc);
  } catch (const std::invalid_argument& e) {
    err << c.input << ":0: error: ScriptError: " << e.what() << '\n';
    return kExitFailure;
  }

  fs::path target = c.output.empty() ? fs::path(c.input).replace_extension(".html") : fs::path(c.output);
  emit(target, page.text, out);
  if (emit_manifest) {
    fs::path manifest = target == "-" ? fs::path(c.input) : target;
    manifest.replace_extension(".manifest.json");
    write_file_atomic(manifest, transpile::manifest_json(page));
  }
  return kExitOk;
}

int cmd_translate(const Common& c, std::ostream& out, std::ostream& err) {
  std::string source = read_file(c.input);
  translate::TranslateResult result;
  try {
    result = translate::translate_snapshot(translate::parse_snapshot(source));
  } catch (const translate::SnapshotError& e) {
    err << c.input << ":0: error: Snapshot: " << e.what() << '\n';
    return kExitFailure;
  }
  report(c.input, result.warnings, err);
  fs::path target = c.output.empty() ? fs::path(c.input).replace_extension(".maml") : fs::path(c.output);
  emit(target, serialize_document(result.document), out);
  return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& inputs, bool json, std::ostream& out, std::ostream& err) {
  std::vector<analyze::PageReport> reports;
  for (const auto& input : inputs) {
    std::string source = read_file(input);
    try {
      reports.push_back(analyze::report_page(source));
    } catch (const analyze::MalformedHtml& e) {
      err << input << ":0: error: MalformedHtml: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  if (reports.size() == 1) {
    if (json) {
      out << reports[0].to_json().dump() << '\n';
    } else {
      out << analyze::compare(reports[0], reports[0]).to_table();
    }
    return kExitOk;
  }
  auto delta = analyze::compare(reports[0], reports[1]);
  if (json) {
    out << delta.to_json().dump() << '\n';
  } else {
    out << delta.to_table();
  }
  return kExitOk;
}

}  // namespace

void write_file_atomic(const fs::path& path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError{tmp.string() + ": cannot write file"};
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError{tmp.string() + ": write error"};
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError{path.string() + ": " + ec.message()};
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MAML toolchain: validate, format, transpile, translate and analyze pages", "maml"};
  app.require_subcommand(1);

  Common validate_opts, fmt_opts, transpile_opts, translate_opts;
  bool fmt_check = false;
  bool emit_manifest = false;
  bool analyze_json = false;
  std::vector<std::string> analyze_inputs;

  auto* validate = app.add_subcommand("validate", "Check a .maml file");
  validate->add_option("input", validate_opts.input, "Input .maml file")->required();
  add_mode_flags(validate, validate_opts);

  auto* fmt = app.add_subcommand("fmt", "Rewrite a .maml file in canonical form");
  fmt->add_option("input", fmt_opts.input, "Input .maml file")->required();
  fmt->add_option("-o,--output", fmt_opts.output, "Output path (default: in place; - for stdout)");
  fmt->add_flag("--check", fmt_check, "Exit 1 if the file is not canonical; write nothing");
  add_mode_flags(fmt, fmt_opts);

  auto* transpile = app.add_subcommand("transpile", "Convert a .maml file to HTML");
  transpile->add_option("input", transpile_opts.input, "Input .maml file")->required();
  transpile->add_option("-o,--output", transpile_opts.output, "Output .html path (- for stdout)");
  transpile->add_flag("--emit-manifest", emit_manifest, "Also write <out>.manifest.json listing media URLs");
  add_mode_flags(transpile, transpile_opts);

  auto* translate = app.add_subcommand("translate", "Convert a layout snapshot to .maml");
  translate->add_option("input", translate_opts.input, "Snapshot JSON file")->required();
  translate->add_option("-o,--output", translate_opts.output, "Output .maml path (- for stdout)");

  auto* analyze = app.add_subcommand("analyze", "Report page complexity, or compare two pages");
  analyze->add_option("inputs", analyze_inputs, "original.html [maml.html]")->required()->expected(1, 2);
  analyze->add_flag("--json", analyze_json, "Print JSON instead of a table");

  std::vector<const char*> argv{"maml"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "maml: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_opts, err);
    if (*fmt) return cmd_fmt(fmt_opts, fmt_check, out, err);
    if (*transpile) return cmd_transpile(transpile_opts, emit_manifest, out, err);
    if (*translate) return cmd_translate(translate_opts, out, err);
    if (*analyze) return cmd_analyze(analyze_inputs, analyze_json, out, err);
  } catch (const IoError& e) {
    err << "maml: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maml::cli
