#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "altpath/geom.hpp"

namespace altpath {

enum class Color { Red, Blue };

inline const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

struct ColoredPoint {
  int id = 0;
  Point point;
  Color color = Color::Red;
};

std::vector<Point> positions(std::span<const ColoredPoint> pts);

/// Convex regions Q_1..Q_s together with the point-id -> region-index map
/// that settles points lying on shared boundaries.
struct Partition {
  std::vector<ConvexRegion> regions;
  std::map<int, int> assignment;

  /// Points of `pts` assigned to region `index`.
  std::vector<ColoredPoint> members(std::span<const ColoredPoint> pts, int index) const;
};

/// Ordered list of point ids; colors alternate along it (and across the wrap
/// when closed). Validity is established only by verify_path.
struct AltPath {
  std::vector<int> order;
  bool closed = false;

  friend bool operator==(const AltPath&, const AltPath&) = default;
};

}  // namespace altpath
