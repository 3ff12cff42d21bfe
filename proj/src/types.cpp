#include "altpath/types.hpp"

namespace altpath {

std::vector<Point> positions(std::span<const ColoredPoint> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.point);
  return out;
}

std::vector<ColoredPoint> Partition::members(std::span<const ColoredPoint> pts, int index) const {
  std::vector<ColoredPoint> out;
  for (const auto& p : pts) {
    auto it = assignment.find(p.id);
    if (it != assignment.end() && it->second == index) out.push_back(p);
  }
  return out;
}

}  // namespace altpath
