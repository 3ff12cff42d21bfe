#include "altpath/path.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "altpath/partition.hpp"

namespace altpath {

const char* to_string(PathErrorKind kind) {
  switch (kind) {
    case PathErrorKind::NotSeparated: return "NotSeparated";
    case PathErrorKind::SingleColor: return "SingleColor";
    case PathErrorKind::HypothesisViolated: return "HypothesisViolated";
    case PathErrorKind::AugmentationFailed: return "AugmentationFailed";
  }
  return "?";
}

PathError::PathError(PathErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::vector<Point> Instance::polygon_points() const {
  std::vector<Point> out;
  for (std::size_t i : polygon) out.push_back(red.at(i).point);
  return out;
}

std::vector<ColoredPoint> Instance::exterior_red() const {
  std::set<std::size_t> on_polygon(polygon.begin(), polygon.end());
  std::vector<ColoredPoint> out;
  for (std::size_t i = 0; i < red.size(); ++i)
    if (!on_polygon.count(i)) out.push_back(red[i]);
  return out;
}

std::vector<ColoredPoint> Instance::all_points() const {
  std::vector<ColoredPoint> out = red;
  out.insert(out.end(), blue.begin(), blue.end());
  return out;
}

namespace {

[[noreturn]] void violated(const std::string& what) { throw PathError(PathErrorKind::HypothesisViolated, what); }

bool convex_clockwise(const std::vector<Point>& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    if (orientation(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) != Orientation::Clockwise) return false;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (orientation(poly[0], poly[i], poly[i + 1]) != Orientation::Clockwise) return false;
  return true;
}

const ColoredPoint& find_id(const std::vector<ColoredPoint>& pts, int id) {
  for (const auto& p : pts)
    if (p.id == id) return p;
  violated("id " + std::to_string(id) + " not among the points");
}

}  // namespace

void validate(const Instance& inst) {
  const std::size_t s = inst.polygon.size();
  if (s < 3) violated("polygon needs at least three vertices");
  std::set<std::size_t> seen;
  for (std::size_t i : inst.polygon) {
    if (i >= inst.red.size()) violated("polygon index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) violated("polygon index " + std::to_string(i) + " repeated");
  }
  std::set<int> ids;
  for (const auto& p : inst.red) {
    if (p.color != Color::Red) violated("point #" + std::to_string(p.id) + " in the red list is not red");
    if (!ids.insert(p.id).second) violated("duplicate id " + std::to_string(p.id));
  }
  for (const auto& p : inst.blue) {
    if (p.color != Color::Blue) violated("point #" + std::to_string(p.id) + " in the blue list is not blue");
    if (!ids.insert(p.id).second) violated("duplicate id " + std::to_string(p.id));
  }
  const auto all = inst.all_points();
  if (auto bad = general_position(positions(all))) {
    violated("points #" + std::to_string(all[bad->i].id) + ", #" + std::to_string(all[bad->j].id) + ", #" +
             std::to_string(all[bad->k].id) + " are collinear or coincide");
  }
  const auto poly = inst.polygon_points();
  if (!convex_clockwise(poly)) violated("polygon is not convex and clockwise");
  const ConvexRegion region = ConvexRegion::from_vertices(poly);
  for (const auto& b : inst.blue)
    if (region_contains(region, b.point) != Containment::Interior)
      violated("blue #" + std::to_string(b.id) + " is not inside the polygon");
  for (const auto& r : inst.exterior_red())
    if (region_contains(region, r.point) != Containment::Outside)
      violated("red #" + std::to_string(r.id) + " is not outside the polygon");
  const long diff = static_cast<long>(inst.red.size()) - static_cast<long>(inst.blue.size());
  if (diff < -1 || diff > 1) violated("red and blue counts differ by more than one");
}

std::pair<int, int> top_alternating_edge(const std::vector<ColoredPoint>& x, const DirectedLine& sep) {
  std::optional<Side> red_side, blue_side;
  for (const auto& p : x) {
    const Side s = side_of(sep, p.point);
    if (s == Side::On) throw PathError(PathErrorKind::NotSeparated, "point #" + std::to_string(p.id) + " lies on the separator");
    auto& expected = p.color == Color::Red ? red_side : blue_side;
    if (!expected) expected = s;
    if (*expected != s) throw PathError(PathErrorKind::NotSeparated, "a color class straddles the separator");
  }
  if (!red_side || !blue_side) throw PathError(PathErrorKind::SingleColor, "need at least one point of each color");
  if (*red_side == *blue_side) throw PathError(PathErrorKind::NotSeparated, "both colors on the same side");

  std::map<Point, const ColoredPoint*> by_point;
  for (const auto& p : x) by_point[p.point] = &p;

  std::vector<std::pair<Point, Point>> edges;
  try {
    const ConvexRegion hull = convex_hull(positions(x));
    for (std::size_t i = 0; i < hull.size(); ++i) edges.emplace_back(hull.vertex(i), hull.vertex(i + 1));
  } catch (const DegenerateHull&) {
    // Two points, or all on one line: consecutive points along that line.
    std::vector<Point> sorted = positions(x);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) edges.emplace_back(sorted[i], sorted[i + 1]);
  }

  const Point d = sep.direction();
  std::optional<Rational> best;
  std::pair<int, int> result{-1, -1};
  for (const auto& [u, v] : edges) {
    const ColoredPoint* cu = by_point.at(u);
    const ColoredPoint* cv = by_point.at(v);
    if (cu->color == cv->color) continue;
    const Rational su = cross(d, u - sep.a);
    const Rational sv = cross(d, v - sep.a);
    const Point hit = u + Rational(su / (su - sv)) * (v - u);
    const Rational along = dot(hit - sep.a, d);
    if (best && along == *best) throw PathError(PathErrorKind::NotSeparated, "two alternating edges cross at one height");
    if (!best || along > *best) {
      best = along;
      result = cu->color == Color::Red ? std::make_pair(cu->id, cv->id) : std::make_pair(cv->id, cu->id);
    }
  }
  return result;
}

AltPath separated_path(const std::vector<ColoredPoint>& red, const std::vector<ColoredPoint>& blue, int r1, int r2) {
  if (red.size() != blue.size() + 1) violated("separated path needs exactly one more red than blue");
  if (r1 == r2) violated("r1 and r2 must differ");
  const ColoredPoint& a = find_id(red, r1);
  const ColoredPoint& b = find_id(red, r2);
  std::vector<ColoredPoint> all = red;
  all.insert(all.end(), blue.begin(), blue.end());
  if (general_position(positions(all))) violated("points are not in general position");

  const DirectedLine line(a.point, b.point);
  const Point d = line.direction();
  std::optional<Side> blue_side;
  for (const auto& p : blue) {
    const Side s = side_of(line, p.point);
    if (!blue_side) blue_side = s;
    if (s != *blue_side) violated("blues lie on both sides of r1 r2");
  }
  for (const auto& p : red)
    if (p.id != r1 && p.id != r2 && side_of(line, p.point) == *blue_side)
      violated("red #" + std::to_string(p.id) + " lies on the blue side of r1 r2");
  if (all.size() >= 3) {
    const ConvexRegion hull = convex_hull(positions(all));
    const auto& vs = hull.vertices();
    if (std::find(vs.begin(), vs.end(), a.point) == vs.end() || std::find(vs.begin(), vs.end(), b.point) == vs.end())
      violated("r1 and r2 must be vertices of the convex hull");
  }

  // Slide the line halfway towards the nearest blue so that r1, r2 fall
  // strictly on the red side.
  Rational gap = -1;
  for (const auto& p : blue) {
    const Rational c = abs(cross(d, p.point - a.point));
    if (gap < 0 || c < gap) gap = c;
  }
  const Point normal(-d.y(), d.x());
  const Rational sign = *blue_side == Side::Left ? 1 : -1;
  const Rational lambda = sign * gap / (2 * dot(d, d));
  DirectedLine sep(a.point + lambda * normal, b.point + lambda * normal);
  if (top_alternating_edge(all, sep).first != r1) sep = sep.reversed();
  if (top_alternating_edge(all, sep).first != r1) violated("r1 is not on an alternating hull edge");

  AltPath path{{r1}, false};
  Color last = Color::Red;
  std::vector<ColoredPoint> rest;
  for (const auto& p : all)
    if (p.id != r1) rest.push_back(p);
  while (!rest.empty()) {
    int next;
    if (rest.size() == 1) {
      next = rest.front().id;
    } else {
      const auto [r, bl] = top_alternating_edge(rest, sep);
      next = last == Color::Red ? bl : r;
    }
    auto it = std::find_if(rest.begin(), rest.end(), [&](const ColoredPoint& p) { return p.id == next; });
    last = it->color;
    path.order.push_back(next);
    rest.erase(it);
  }
  if (path.order.back() != r2) violated("construction did not end at r2");
  return path;
}

AltPath closed_cycle(const Instance& inst) {
  validate(inst);
  if (inst.red.size() != inst.blue.size()) violated("closed cycle needs as many reds as blues");
  const auto poly = inst.polygon_points();
  const auto exterior = inst.exterior_red();
  const Partition part = partition::plane_partition(poly, inst.blue, exterior);

  std::vector<ColoredPoint> pts = inst.blue;
  pts.insert(pts.end(), exterior.begin(), exterior.end());
  const std::size_t s = inst.polygon.size();
  AltPath cycle{{}, true};
  for (std::size_t i = 0; i < s; ++i) {
    const ColoredPoint& from = inst.red[inst.polygon[i]];
    const ColoredPoint& to = inst.red[inst.polygon[(i + 1) % s]];
    std::vector<ColoredPoint> reds{from, to}, blues;
    for (const auto& p : part.members(pts, static_cast<int>(i))) (p.color == Color::Red ? reds : blues).push_back(p);
    const AltPath piece = separated_path(reds, blues, from.id, to.id);
    cycle.order.insert(cycle.order.end(), piece.order.begin(), piece.order.end() - 1);
  }
  return cycle;
}

AltPath open_path(const Instance& inst, std::uint64_t seed) {
  validate(inst);
  const long diff = static_cast<long>(inst.red.size()) - static_cast<long>(inst.blue.size());
  if (diff != 1 && diff != -1) violated("open path needs class sizes differing by one");

  const auto poly = inst.polygon_points();
  const ConvexRegion region = ConvexRegion::from_vertices(poly);
  auto all = positions(inst.all_points());
  int aux_id = 0;
  for (const auto& p : inst.all_points()) aux_id = std::max(aux_id, p.id + 1);

  Rational minx = all[0].x(), maxx = minx, miny = all[0].y(), maxy = miny;
  for (const auto& p : all) {
    minx = std::min(minx, p.x());
    maxx = std::max(maxx, p.x());
    miny = std::min(miny, p.y());
    maxy = std::max(maxy, p.y());
  }
  const Rational pad = std::max({Rational(maxx - minx), Rational(maxy - miny), Rational(1)});

  std::mt19937_64 rng(seed);
  constexpr int kBudget = 1000;
  constexpr long kGrid = 1 << 12;
  std::uniform_int_distribution<long> weight(1, 1000), grid(0, kGrid);
  std::optional<Point> aux;
  for (int attempt = 0; attempt < kBudget && !aux; ++attempt) {
    Point candidate;
    if (diff == 1) {
      Rational sx = 0, sy = 0, total = 0;
      for (const auto& v : poly) {
        const Rational w = weight(rng);
        sx += w * v.x();
        sy += w * v.y();
        total += w;
      }
      candidate = Point(sx / total, sy / total);
    } else {
      const Rational x = minx - pad + (maxx - minx + 2 * pad) * Rational(grid(rng), kGrid);
      const Rational y = miny - pad + (maxy - miny + 2 * pad) * Rational(grid(rng), kGrid);
      candidate = Point(x, y);
      if (region_contains(region, candidate) != Containment::Outside) continue;
    }
    all.push_back(candidate);
    if (!general_position(all)) aux = candidate;
    all.pop_back();
  }
  if (!aux) throw PathError(PathErrorKind::AugmentationFailed, "no auxiliary point in general position found");

  Instance augmented = inst;
  (diff == 1 ? augmented.blue : augmented.red).push_back({aux_id, *aux, diff == 1 ? Color::Blue : Color::Red});
  const AltPath cycle = closed_cycle(augmented);
  const auto at = std::find(cycle.order.begin(), cycle.order.end(), aux_id);
  AltPath path{{}, false};
  path.order.insert(path.order.end(), at + 1, cycle.order.end());
  path.order.insert(path.order.end(), cycle.order.begin(), at);
  return path;
}

AltPath solve(const Instance& inst, std::uint64_t seed) {
  return inst.red.size() == inst.blue.size() ? closed_cycle(inst) : open_path(inst, seed);
}

}  // namespace altpath
