#include "maml/transpile/scale.hpp"

namespace maml::transpile {

ScaleModel ScaleModel::from_document(const Document& doc) {
  ScaleModel model;
  model.original_viewport_width = static_cast<double>(doc.viewport_width);
  for (const auto& el : doc.elements) {
    if (el.kind() == ElementKind::Script) continue;
    model.authored.push_back({el.geometry().x, el.geometry().w});
  }
  return model;
}

double ScaleModel::factor(double live_width) const { return live_width / original_viewport_width; }

std::vector<AuthoredColumn> ScaleModel::rescale(double live_width) const {
  const double s = factor(live_width);
  std::vector<AuthoredColumn> out;
  out.reserve(authored.size());
  for (const auto& col : authored) out.push_back({col.x * s, col.w * s});
  return out;
}

Geometry rescale(const Geometry& authored, double original_width, double live_width) {
  const double s = live_width / original_width;
  Geometry g = authored;
  g.x = authored.x * s;
  g.w = authored.w * s;
  return g;
}

}  // namespace maml::transpile
