#pragma once

#include <vector>

#include "maml/core/document.hpp"

namespace maml::transpile {

// Authored horizontal geometry of one body child.
struct AuthoredColumn {
  double x = 0;
  double w = 0;

  bool operator==(const AuthoredColumn&) const = default;
};

// Proportional width scaling. Content authored for `original_viewport_width`
// is drawn at live width L by multiplying left and width by
//   S = L / original_viewport_width
// so a narrower viewport shrinks the layout. Top and height never change.
// Every rescale starts from the authored table, so repeated application
// never compounds.
struct ScaleModel {
  double original_viewport_width = 0;
  std::vector<AuthoredColumn> authored;  // one per rendered element, document order

  static ScaleModel from_document(const Document& doc);

  double factor(double live_width) const;
  std::vector<AuthoredColumn> rescale(double live_width) const;
};

// Single-element form of the rule; y, z and h pass through untouched.
Geometry rescale(const Geometry& authored, double original_width, double live_width);

}  // namespace maml::transpile
