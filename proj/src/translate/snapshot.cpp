#include "maml/translate/snapshot.hpp"

#include <cmath>
#include <limits>

#include "maml/format/json_text.hpp"

namespace maml::translate {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw SnapshotError(SnapshotErrc::Malformed, what); }

double number_field(const nlohmann::json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_number()) malformed(where + ": \"" + name + "\" must be a number");
  double v = it->get<double>();
  if (!std::isfinite(v)) malformed(where + ": \"" + name + "\" must be finite");
  return v;
}

std::string scalar_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return json_text::number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return {};
}

SnapshotNode node_from_json(const nlohmann::json& j, std::int64_t& last_index, int depth) {
  if (depth > 4096) malformed("node tree too deep");
  if (!j.is_object()) malformed("node must be an object");
  SnapshotNode node;
  auto tag = j.find("tag");
  if (tag == j.end() || !tag->is_string()) malformed("node lacks a \"tag\" string");
  node.tag = tag->get<std::string>();
  const std::string where = "node <" + node.tag + ">";

  auto index = j.find("paint_index");
  if (index == j.end() || !index->is_number_integer()) malformed(where + ": \"paint_index\" must be an integer");
  node.paint_index = index->get<std::int64_t>();
  if (node.paint_index <= last_index)
    throw SnapshotError(SnapshotErrc::Invalid, where + ": paint_index " + std::to_string(node.paint_index) +
                                                   " does not increase in depth-first order");
  last_index = node.paint_index;

  auto rect = j.find("rect");
  if (rect == j.end() || !rect->is_object()) malformed(where + ": \"rect\" must be an object");
  node.rect = {number_field(*rect, "x", where), number_field(*rect, "y", where), number_field(*rect, "w", where),
               number_field(*rect, "h", where)};

  if (auto attrs = j.find("attrs"); attrs != j.end()) {
    if (!attrs->is_object()) malformed(where + ": \"attrs\" must be an object");
    for (const auto& [k, v] : attrs->items()) node.attrs.emplace(k, scalar_string(v));
  }
  if (auto style = j.find("style"); style != j.end()) {
    if (!style->is_object()) malformed(where + ": \"style\" must be an object");
    for (const auto& [k, v] : style->items()) node.style.emplace(k, scalar_string(v));
  }
  if (auto text = j.find("text"); text != j.end()) {
    if (!text->is_string()) malformed(where + ": \"text\" must be a string");
    node.text = text->get<std::string>();
  }
  if (auto warning = j.find("warning"); warning != j.end()) node.warning = scalar_string(*warning);
  if (auto children = j.find("children"); children != j.end()) {
    if (!children->is_array()) malformed(where + ": \"children\" must be an array");
    node.children.reserve(children->size());
    for (const auto& child : *children) node.children.push_back(node_from_json(child, last_index, depth + 1));
  }
  return node;
}

nlohmann::json node_to_json(const SnapshotNode& node) {
  nlohmann::json j;
  j["tag"] = node.tag;
  if (!node.attrs.empty()) j["attrs"] = node.attrs;
  j["rect"] = {{"x", node.rect.x}, {"y", node.rect.y}, {"w", node.rect.w}, {"h", node.rect.h}};
  if (!node.style.empty()) j["style"] = node.style;
  if (!node.text.empty()) j["text"] = node.text;
  if (!node.warning.empty()) j["warning"] = node.warning;
  j["paint_index"] = node.paint_index;
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : node.children) children.push_back(node_to_json(child));
  if (!children.empty()) j["children"] = std::move(children);
  return j;
}

}  // namespace

const std::string* SnapshotNode::attr(std::string_view name) const {
  auto it = attrs.find(std::string(name));
  return it == attrs.end() ? nullptr : &it->second;
}

std::string_view SnapshotNode::style_value(std::string_view name) const {
  auto it = style.find(std::string(name));
  return it == style.end() ? std::string_view() : std::string_view(it->second);
}

LayoutSnapshot snapshot_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("snapshot must be a JSON object");
  auto schema = j.find("schema");
  if (schema == j.end()) throw SnapshotError(SnapshotErrc::SchemaMismatch, "snapshot lacks a \"schema\" version");
  if (!schema->is_number_integer() || schema->get<std::int64_t>() != kSnapshotSchemaVersion)
    throw SnapshotError(SnapshotErrc::SchemaMismatch,
                        "unsupported snapshot schema " + schema->dump() + " (expected " +
                            std::to_string(kSnapshotSchemaVersion) + ")");

  auto viewport = j.find("viewport");
  if (viewport == j.end() || !viewport->is_object()) malformed("\"viewport\" must be an object");
  auto width = viewport->find("width");
  auto height = viewport->find("height");
  if (width == viewport->end() || !width->is_number_integer()) malformed("viewport.width must be an integer");
  if (height == viewport->end() || !height->is_number_integer()) malformed("viewport.height must be an integer");

  LayoutSnapshot snap;
  snap.viewport_width = width->get<std::int64_t>();
  snap.viewport_height = height->get<std::int64_t>();
  if (snap.viewport_width <= 0) throw SnapshotError(SnapshotErrc::Invalid, "viewport.width must be positive");

  auto root = j.find("root");
  if (root == j.end()) malformed("snapshot lacks \"root\"");
  std::int64_t last = std::numeric_limits<std::int64_t>::min();
  snap.root = node_from_json(*root, last, 0);
  return snap;
}

LayoutSnapshot parse_snapshot(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("snapshot is not valid JSON: ") + e.what());
  }
  return snapshot_from_json(j);
}

nlohmann::json to_json(const LayoutSnapshot& snap) {
  return {{"schema", kSnapshotSchemaVersion},
          {"viewport", {{"width", snap.viewport_width}, {"height", snap.viewport_height}}},
          {"root", node_to_json(snap.root)}};
}

}  // namespace maml::translate
