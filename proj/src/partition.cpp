#include "altpath/partition.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace altpath::partition {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConditionsViolated: return "ConditionsViolated";
    case ErrorKind::NoApexFound: return "NoApexFound";
    case ErrorKind::ApexAtVertex: return "ApexAtVertex";
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::SweepInfeasible: return "SweepInfeasible";
    case ErrorKind::PointOnLine: return "PointOnLine";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::BracketingViolated: return "BracketingViolated";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  }
  return "?";
}

const char* to_string(Partitionability p) {
  switch (p) {
    case Partitionability::LeftOnly: return "LeftOnly";
    case Partitionability::RightOnly: return "RightOnly";
    case Partitionability::Both: return "Both";
  }
  return "?";
}

PartitionError::PartitionError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

int discrepancy(std::span<const ColoredPoint> points) {
  int d = 0;
  for (const auto& p : points) d += p.color == Color::Blue ? 1 : -1;
  return d;
}

HalfPlane outer_halfplane(const ConvexRegion& poly, std::size_t edge_index) {
  if (edge_index >= poly.size()) throw std::out_of_range("edge index out of range");
  return HalfPlane{poly.edge(edge_index), Side::Left};
}

namespace {

int sgn_of(const Point& a, const Point& b, const Point& c) { return orient_sign(a, b, c); }

std::string dump_points(std::span<const ColoredPoint> pts) {
  std::ostringstream os;
  for (const auto& p : pts) os << "  #" << p.id << " " << to_string(p.color) << " " << to_string(p.point) << "\n";
  return os.str();
}

std::string dump_poly(std::span<const Point> poly) {
  std::ostringstream os;
  for (const auto& p : poly) os << to_string(p) << " ";
  return os.str();
}

std::vector<ColoredPoint> concat(std::span<const ColoredPoint> a, std::span<const ColoredPoint> b) {
  std::vector<ColoredPoint> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Clockwise, strictly convex vertex loop.
bool is_convex_cw(std::span<const Point> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (orientation(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) != Orientation::Clockwise) return false;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (orientation(poly[0], poly[i], poly[i + 1]) != Orientation::Clockwise) return false;
  return true;
}

// Closed sector test: q lies in the wedge of region i (edge t_i t_{i+1}) seen from apex x.
unsigned sector_mask(const Point& x, const std::array<Point, 3>& t, const Point& q) {
  std::array<int, 3> o{};
  for (int i = 0; i < 3; ++i) o[i] = sgn_of(x, t[i], q);
  unsigned mask = 0;
  for (int i = 0; i < 3; ++i)
    if (o[i] <= 0 && o[(i + 1) % 3] >= 0) mask |= 1u << i;
  return mask;
}

std::optional<std::array<ConvexRegion, 3>> build_wedges(const Point& apex, const std::array<Point, 3>& t,
                                                        const ConvexRegion& ambient) {
  std::array<std::optional<ConvexRegion>, 3> out;
  for (int i = 0; i < 3; ++i) {
    auto r = clip(ambient, DirectedLine(apex, t[i]), Side::Right);
    if (r) r = clip(*r, DirectedLine(apex, t[(i + 1) % 3]), Side::Left);
    if (!r) return std::nullopt;
    out[i] = std::move(r);
  }
  return std::array<ConvexRegion, 3>{*out[0], *out[1], *out[2]};
}

// Region set per point at apex x; then exhaustive choice for boundary points.
std::optional<std::map<int, int>> match_targets(const Point& x, const std::array<Point, 3>& t,
                                                std::span<const ColoredPoint> pts, const Targets& targets) {
  std::array<int, 3> fixed{0, 0, 0};
  std::vector<std::pair<const ColoredPoint*, unsigned>> loose;
  std::map<int, int> assignment;
  for (const auto& p : pts) {
    const unsigned mask = sector_mask(x, t, p.point);
    const int w = p.color == Color::Blue ? 1 : -1;
    if (mask == 1 || mask == 2 || mask == 4) {
      const int idx = mask == 1 ? 0 : mask == 2 ? 1 : 2;
      fixed[idx] += w;
      assignment[p.id] = idx;
    } else {
      loose.emplace_back(&p, mask);
    }
  }
  if (loose.size() > 16) return std::nullopt;
  std::array<int, 3> need{targets[0] - fixed[0], targets[1] - fixed[1], targets[2] - fixed[2]};
  std::vector<int> choice(loose.size(), -1);
  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == loose.size()) return need[0] == 0 && need[1] == 0 && need[2] == 0;
    const int w = loose[k].first->color == Color::Blue ? 1 : -1;
    for (int r = 0; r < 3; ++r) {
      if (!(loose[k].second & (1u << r))) continue;
      need[r] -= w;
      choice[k] = r;
      if (dfs(k + 1)) return true;
      need[r] += w;
    }
    return false;
  };
  // Every loose point can swing at most one unit per region.
  int slack = static_cast<int>(loose.size());
  if (std::abs(need[0]) + std::abs(need[1]) + std::abs(need[2]) > 2 * slack) return std::nullopt;
  if (!dfs(0)) return std::nullopt;
  for (std::size_t k = 0; k < loose.size(); ++k) assignment[loose[k].first->id] = choice[k];
  return assignment;
}

// Lines through a triangle vertex that enter the triangle interior.
bool crosses_triangle(const std::array<Point, 3>& t, int i, const Point& q) {
  const Point& v = t[i];
  const Point& next = t[(i + 1) % 3];
  const Point& prev = t[(i + 2) % 3];
  auto inside_angle = [&](const Point& z) {
    return sgn_of(v, next, z) < 0 && sgn_of(v, prev, z) > 0;
  };
  const Point mirror = Point(2 * v.x() - q.x(), 2 * v.y() - q.y());
  return inside_angle(q) || inside_angle(mirror);
}

std::optional<Partition> search_apex(const ConvexRegion& ambient, const std::array<Point, 3>& t,
                                     std::span<const ColoredPoint> pts, const Targets& targets) {
  const ConvexRegion tri = ConvexRegion::from_vertices({t.begin(), t.end()});
  std::set<Point> tried;

  auto attempt = [&](const Point& x) -> std::optional<Partition> {
    if (x == t[0] || x == t[1] || x == t[2]) return std::nullopt;
    if (!tried.insert(x).second) return std::nullopt;
    auto assignment = match_targets(x, t, pts, targets);
    if (!assignment) return std::nullopt;
    auto wedges = build_wedges(x, t, ambient);
    if (!wedges) return std::nullopt;
    Partition part;
    part.regions.assign(wedges->begin(), wedges->end());
    part.assignment = std::move(*assignment);
    return part;
  };

  if (auto p = attempt(centroid(std::span<const Point>(t.data(), 3)))) return p;

  std::vector<DirectedLine> lines;
  for (int i = 0; i < 3; ++i) lines.emplace_back(t[i], t[(i + 1) % 3]);
  for (int i = 0; i < 3; ++i)
    for (const auto& q : pts)
      if (q.point != t[i] && crosses_triangle(t, i, q.point)) lines.emplace_back(t[i], q.point);

  for (std::size_t a = 0; a < lines.size(); ++a) {
    const Point dir = lines[a].direction();
    std::vector<std::pair<Rational, Point>> stops;
    for (std::size_t b = 0; b < lines.size(); ++b) {
      if (a == b || sgn(cross(dir, lines[b].direction())) == 0) continue;
      Point z = line_intersection(lines[a], lines[b]);
      if (region_contains(tri, z) == Containment::Outside) continue;
      stops.emplace_back(dot(z - lines[a].a, dir), std::move(z));
    }
    std::sort(stops.begin(), stops.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    stops.erase(std::unique(stops.begin(), stops.end(), [](const auto& l, const auto& r) { return l.first == r.first; }),
                stops.end());
    for (std::size_t k = 0; k < stops.size(); ++k) {
      if (auto p = attempt(stops[k].second)) return p;
      if (k + 1 < stops.size()) {
        const Point mid((stops[k].second.x() + stops[k + 1].second.x()) / 2,
                        (stops[k].second.y() + stops[k + 1].second.y()) / 2);
        if (auto p = attempt(mid)) return p;
      }
    }
  }
  return std::nullopt;
}

// Lemma-3 step with every point of the ambient region present: blues outside
// the triangle are charged to the edge they lie beyond, the remaining targets
// are checked against the necessary conditions, then the apex is searched.
Partition split_by_triangle(const ConvexRegion& ambient, const std::array<Point, 3>& t,
                            std::span<const ColoredPoint> pts, const Targets& full_targets) {
  std::vector<ColoredPoint> inner_blue, red;
  Targets reduced = full_targets;
  for (const auto& p : pts) {
    if (p.color == Color::Red) {
      red.push_back(p);
      continue;
    }
    int beyond = -1;
    for (int e = 0; e < 3 && beyond < 0; ++e)
      if (sgn_of(t[e], t[(e + 1) % 3], p.point) > 0) beyond = e;
    if (beyond < 0) {
      inner_blue.push_back(p);
    } else {
      reduced[beyond] -= 1;
    }
  }
  const auto verdict = check_conditions(ambient, std::span<const Point>(t.data(), 3), red, inner_blue, reduced);
  if (!std::holds_alternative<ConditionsOk>(verdict)) {
    std::ostringstream os;
    os << "targets (" << reduced[0] << ", " << reduced[1] << ", " << reduced[2] << ") fail the interval conditions";
    throw PartitionError(ErrorKind::ConditionsViolated, os.str());
  }
  auto part = search_apex(ambient, t, pts, full_targets);
  if (!part) {
    std::ostringstream os;
    os << "no apex meets targets (" << full_targets[0] << ", " << full_targets[1] << ", " << full_targets[2]
       << ")\ntriangle: " << dump_poly(std::span<const Point>(t.data(), 3)) << "\nambient: " << dump_poly(ambient.vertices())
       << "\npoints:\n"
       << dump_points(pts);
    throw PartitionError(ErrorKind::NoApexFound, os.str());
  }
  return std::move(*part);
}

// Directions strictly inside the cone from u0 to u1 (the short way), one per
// angular gap between consecutive point directions, in sweep order.
std::vector<Point> gap_directions(const Point& pivot, const Point& u0, const Point& u1,
                                  std::span<const ColoredPoint> pts) {
  const int sense = sgn(cross(u0, u1));
  if (sense == 0) throw PartitionError(ErrorKind::SweepInfeasible, "sweep arc is degenerate");
  std::vector<Point> events;
  for (const auto& q : pts) {
    const Point v = q.point - pivot;
    if (v.x() == 0 && v.y() == 0) continue;
    for (const Point& w : {v, Point(-v.x(), -v.y())})
      if (sgn(cross(u0, w)) == sense && sgn(cross(w, u1)) == sense) events.push_back(w);
  }
  std::sort(events.begin(), events.end(),
            [&](const Point& a, const Point& b) { return sgn(cross(a, b)) == sense; });
  events.erase(std::unique(events.begin(), events.end(),
                           [](const Point& a, const Point& b) { return sgn(cross(a, b)) == 0; }),
               events.end());
  std::vector<Point> bounds;
  bounds.push_back(u0);
  bounds.insert(bounds.end(), events.begin(), events.end());
  bounds.push_back(u1);
  std::vector<Point> gaps;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) gaps.push_back(normalize_inf(bounds[k]) + normalize_inf(bounds[k + 1]));
  return gaps;
}

int side_discrepancy(const DirectedLine& l, Side side, std::span<const ColoredPoint> pts) {
  int d = 0;
  for (const auto& p : pts) {
    const Side s = side_of(l, p.point);
    if (s == Side::On) throw PartitionError(ErrorKind::PointOnLine, "point #" + std::to_string(p.id) + " on split line");
    if (s == side) d += p.color == Color::Blue ? 1 : -1;
  }
  return d;
}

std::optional<Split> sweep_split(const ConvexRegion& region, const Point& pivot, const Point& from, const Point& to,
                                 std::span<const ColoredPoint> pts, Side keep, int target) {
  for (const Point& dir : gap_directions(pivot, from - pivot, to - pivot, pts)) {
    const DirectedLine probe(pivot, pivot + dir);
    if (side_discrepancy(probe, keep, pts) == target) {
      Point x = ray_exit(region, pivot, dir);
      return Split{x, DirectedLine(pivot, x)};
    }
  }
  return std::nullopt;
}

std::vector<ColoredPoint> on_side(std::span<const ColoredPoint> pts, const DirectedLine& l, Side keep) {
  std::vector<ColoredPoint> out;
  for (const auto& p : pts)
    if (side_of(l, p.point) == keep) out.push_back(p);
  return out;
}

void append(Partition& into, Partition&& part, std::span<const ColoredPoint> pts) {
  const int offset = static_cast<int>(into.regions.size());
  for (auto& r : part.regions) into.regions.push_back(std::move(r));
  for (const auto& p : pts) into.assignment[p.id] = offset + part.assignment.at(p.id);
}

Partition single_region(const ConvexRegion& region, std::span<const ColoredPoint> pts) {
  Partition p;
  p.regions.push_back(region);
  for (const auto& q : pts) p.assignment[q.id] = 0;
  return p;
}

// Recursive chain partition over the combined point list. chain[0..s] holds
// p_1..p_{s+1}; the paper-style index i maps to chain[i - 1].
Partition chain_rec(const ConvexRegion& region, const Point& a, std::span<const Point> chain,
                    std::span<const ColoredPoint> pts) {
  const int s = static_cast<int>(chain.size()) - 1;
  if (discrepancy(pts) != s) {
    throw PartitionError(ErrorKind::InvalidChain, "chain of " + std::to_string(s) + " edges over discrepancy " +
                                                      std::to_string(discrepancy(pts)));
  }
  if (s == 1) return single_region(region, pts);

  auto p = [&](int i) -> const Point& { return chain[static_cast<std::size_t>(i - 1)]; };
  auto classify = [&](int i) { return classify_diagonal(p(i), a, i, s, pts, region); };
  auto is_left = [](Partitionability c) { return c != Partitionability::RightOnly; };
  auto is_right = [](Partitionability c) { return c != Partitionability::LeftOnly; };

  std::vector<Partitionability> cls(static_cast<std::size_t>(s + 1));
  for (int i = 2; i <= s; ++i) cls[static_cast<std::size_t>(i)] = classify(i);

  if (is_right(cls[2])) {
    auto split = sweep_split(region, p(2), a, p(1), pts, Side::Right, 1);
    if (!split) throw PartitionError(ErrorKind::SweepInfeasible, "no rotation about p_2 isolates discrepancy 1");
    auto first = clip(region, split->line, Side::Right);
    auto rest = clip(region, split->line, Side::Left);
    if (!first || !rest) throw PartitionError(ErrorKind::InvalidChain, "rotating split produced an empty side");
    const auto first_pts = on_side(pts, split->line, Side::Right);
    const auto rest_pts = on_side(pts, split->line, Side::Left);
    Partition out = single_region(*first, first_pts);
    append(out, chain_rec(*rest, a, chain.subspan(1), rest_pts), rest_pts);
    return out;
  }
  if (is_left(cls[static_cast<std::size_t>(s)])) {
    auto split = sweep_split(region, p(s), a, p(s + 1), pts, Side::Left, 1);
    if (!split) throw PartitionError(ErrorKind::SweepInfeasible, "no rotation about p_s isolates discrepancy 1");
    auto last = clip(region, split->line, Side::Left);
    auto rest = clip(region, split->line, Side::Right);
    if (!last || !rest) throw PartitionError(ErrorKind::InvalidChain, "rotating split produced an empty side");
    const auto last_pts = on_side(pts, split->line, Side::Left);
    const auto rest_pts = on_side(pts, split->line, Side::Right);
    Partition out = chain_rec(*rest, a, chain.first(static_cast<std::size_t>(s)), rest_pts);
    append(out, single_region(*last, last_pts), last_pts);
    return out;
  }

  int j = -1;
  for (int i = 2; i <= s - 1 && j < 0; ++i)
    if (is_left(cls[static_cast<std::size_t>(i)]) && is_right(cls[static_cast<std::size_t>(i + 1)])) j = i;
  if (j < 0) throw PartitionError(ErrorKind::InvalidChain, "no left/right partitionable pair along the chain");

  const std::array<Point, 3> tri{a, p(j), p(j + 1)};
  Partition three = split_by_triangle(region, tri, pts, Targets{j - 1, 1, s - j});
  const auto o1 = three.members(pts, 0);
  const auto o2 = three.members(pts, 1);
  const auto o3 = three.members(pts, 2);
  Partition out = chain_rec(three.regions[0], a, chain.first(static_cast<std::size_t>(j)), o1);
  append(out, single_region(three.regions[1], o2), o2);
  append(out, chain_rec(three.regions[2], a, chain.subspan(static_cast<std::size_t>(j)), o3), o3);
  return out;
}

// O minus the open cone right of both `edge_line` and `l`; must be convex.
std::optional<ConvexRegion> outside_cone(const ConvexRegion& o, const DirectedLine& edge_line, const DirectedLine& l) {
  auto a = clip(o, edge_line, Side::Left);
  auto b = clip(o, l, Side::Left);
  if (!a) return b;
  if (!b) return a;
  std::vector<Point> all = a->vertices();
  all.insert(all.end(), b->vertices().begin(), b->vertices().end());
  ConvexRegion hull = convex_hull(all);
  auto both = region_intersection(*a, *b);
  const Rational overlap = both ? region_area2(*both) : Rational(0);
  if (region_area2(hull) != region_area2(*a) + region_area2(*b) - overlap) {
    throw PartitionError(ErrorKind::InvalidChain, "wedge piece outside the half-line cone is not convex");
  }
  return hull;
}

}  // namespace

ConditionsResult check_conditions(const ConvexRegion& ambient, std::span<const Point> polygon,
                                  std::span<const ColoredPoint> red, std::span<const ColoredPoint> blue,
                                  const Targets& targets) {
  const int s = static_cast<int>(polygon.size());
  if (static_cast<int>(targets.size()) != s) throw std::invalid_argument("one target per polygon edge required");
  const int expected = static_cast<int>(blue.size()) - static_cast<int>(red.size());
  int sum = 0;
  for (int n : targets) sum += n;
  if (sum != expected) return SumMismatch{expected, sum};

  // beyond[e][r]: red r lies in the closed out(p_e p_{e+1}) within the ambient region.
  std::vector<std::vector<bool>> beyond(static_cast<std::size_t>(s), std::vector<bool>(red.size(), false));
  for (int e = 0; e < s; ++e) {
    const Point& u = polygon[static_cast<std::size_t>(e)];
    const Point& v = polygon[static_cast<std::size_t>((e + 1) % s)];
    for (std::size_t r = 0; r < red.size(); ++r)
      beyond[static_cast<std::size_t>(e)][r] =
          sgn_of(u, v, red[r].point) >= 0 && region_contains(ambient, red[r].point) != Containment::Outside;
  }
  for (int len = 1; len <= s; ++len) {
    for (int start = 0; start < (len == s ? 1 : s); ++start) {
      int total = 0;
      std::vector<int> edges;
      std::vector<bool> hit(red.size(), false);
      for (int k = 0; k < len; ++k) {
        const int e = (start + k) % s;
        edges.push_back(e);
        total += targets[static_cast<std::size_t>(e)];
        for (std::size_t r = 0; r < red.size(); ++r)
          if (beyond[static_cast<std::size_t>(e)][r]) hit[r] = true;
      }
      const int reds = static_cast<int>(std::count(hit.begin(), hit.end(), true));
      if (total < -reds) return ViolatedInterval{edges};
    }
  }
  return ConditionsOk{};
}

std::array<ConvexRegion, 3> wedge_regions(const WedgeFrame& frame) {
  const auto& t = frame.triangle;
  for (const auto& v : t)
    if (frame.apex == v) throw PartitionError(ErrorKind::ApexAtVertex, "apex coincides with a triangle vertex");
  const ConvexRegion tri = ConvexRegion::from_vertices({t.begin(), t.end()});
  if (orientation(t[0], t[1], t[2]) != Orientation::Clockwise)
    throw PartitionError(ErrorKind::InvalidFrame, "triangle must be clockwise");
  if (region_contains(tri, frame.apex) == Containment::Outside)
    throw PartitionError(ErrorKind::InvalidFrame, "apex outside the triangle");
  auto wedges = build_wedges(frame.apex, t, frame.ambient);
  if (!wedges) throw PartitionError(ErrorKind::InvalidFrame, "a wedge has no interior inside the ambient region");
  return *wedges;
}

Partition triangle_partition(const ConvexRegion& ambient, const std::array<Point, 3>& triangle,
                             std::span<const ColoredPoint> blue, std::span<const ColoredPoint> red,
                             const Targets& targets) {
  if (targets.size() != 3) throw std::invalid_argument("triangle partition takes three targets");
  if (orientation(triangle[0], triangle[1], triangle[2]) != Orientation::Clockwise)
    throw PartitionError(ErrorKind::HypothesisViolated, "triangle must be clockwise");
  const ConvexRegion tri = ConvexRegion::from_vertices({triangle.begin(), triangle.end()});
  for (const auto& b : blue)
    if (region_contains(tri, b.point) != Containment::Interior)
      throw PartitionError(ErrorKind::HypothesisViolated, "blue #" + std::to_string(b.id) + " not inside the triangle");
  for (const auto& r : red) {
    if (region_contains(tri, r.point) != Containment::Outside)
      throw PartitionError(ErrorKind::HypothesisViolated, "red #" + std::to_string(r.id) + " not outside the triangle");
    if (region_contains(ambient, r.point) == Containment::Outside)
      throw PartitionError(ErrorKind::HypothesisViolated, "red #" + std::to_string(r.id) + " outside the ambient region");
  }
  const auto verdict = check_conditions(ambient, std::span<const Point>(triangle.data(), 3), red, blue, targets);
  if (!std::holds_alternative<ConditionsOk>(verdict))
    throw PartitionError(ErrorKind::ConditionsViolated, "targets fail the necessary conditions");
  const auto pts = concat(blue, red);
  std::vector<Point> all = positions(pts);
  all.insert(all.end(), triangle.begin(), triangle.end());
  if (general_position(all)) throw PartitionError(ErrorKind::HypothesisViolated, "points not in general position");
  return split_by_triangle(ambient, triangle, pts, targets);
}

Split rotate_split(const ConvexRegion& region, const Point& pivot, const Point& arc_from, const Point& arc_to,
                   std::span<const ColoredPoint> pts, int target) {
  auto split = sweep_split(region, pivot, arc_from, arc_to, pts, Side::Right, target);
  if (!split) throw PartitionError(ErrorKind::SweepInfeasible, "no angular gap reaches the target discrepancy");
  return *split;
}

Partitionability classify_diagonal(const Point& p_i, const Point& anchor, int i, int s,
                                   std::span<const ColoredPoint> pts, const ConvexRegion& region) {
  if (i < 2 || i > s) throw std::invalid_argument("diagonal index must satisfy 2 <= i <= s");
  std::vector<ColoredPoint> inside;
  for (const auto& p : pts)
    if (region_contains(region, p.point) != Containment::Outside) inside.push_back(p);
  const int d = side_discrepancy(DirectedLine(p_i, anchor), Side::Right, inside);
  if (d < i - 1) return Partitionability::LeftOnly;
  if (d > i - 1) return Partitionability::RightOnly;
  return Partitionability::Both;
}

Partition chain_partition(const ConvexRegion& region, const Point& anchor, std::span<const Point> chain,
                          std::span<const ColoredPoint> blue, std::span<const ColoredPoint> red) {
  if (chain.size() < 2) throw PartitionError(ErrorKind::InvalidChain, "chain needs at least two points");
  if (region_contains(region, anchor) != Containment::Boundary ||
      region_contains(region, chain.front()) != Containment::Boundary ||
      region_contains(region, chain.back()) != Containment::Boundary)
    throw PartitionError(ErrorKind::InvalidChain, "anchor and chain ends must lie on the region boundary");
  std::vector<Point> loop;
  if (anchor != chain.front() && anchor != chain.back()) loop.push_back(anchor);
  loop.insert(loop.end(), chain.begin(), chain.end());
  if (loop.size() >= 3 && !is_convex_cw(loop))
    throw PartitionError(ErrorKind::InvalidChain, "anchor and chain do not form a clockwise convex polygon");
  const auto pts = concat(blue, red);
  for (const auto& p : pts)
    if (region_contains(region, p.point) == Containment::Outside)
      throw PartitionError(ErrorKind::InvalidChain, "point #" + std::to_string(p.id) + " outside the region");
  if (discrepancy(pts) != static_cast<int>(chain.size()) - 1)
    throw PartitionError(ErrorKind::InvalidChain, "|blue| - |red| must equal the number of chain edges");
  return chain_rec(region, anchor, chain, pts);
}

DirectedLine find_halfline(const Point& p1, const DirectedLine& wedge_right, const DirectedLine& wedge_left,
                           std::span<const ColoredPoint> red, int target) {
  auto reds_right_of_both = [&](const DirectedLine& l) {
    int n = 0;
    for (const auto& r : red)
      if (side_of(wedge_right, r.point) == Side::Right && side_of(l, r.point) == Side::Right) ++n;
    return n;
  };
  int right_total = 0;
  for (const auto& r : red)
    if (side_of(wedge_right, r.point) == Side::Right) ++right_total;
  const int far_end = reds_right_of_both(wedge_left);
  if (!(target >= -right_total && target < -far_end)) {
    std::ostringstream os;
    os << "target " << target << " outside [" << -right_total << ", " << -far_end << ")";
    throw PartitionError(ErrorKind::BracketingViolated, os.str());
  }
  for (const Point& dir : gap_directions(p1, wedge_right.direction(), wedge_left.direction(), red)) {
    DirectedLine l(p1, p1 + dir);
    if (-reds_right_of_both(l) == target) return l;
  }
  throw PartitionError(ErrorKind::BracketingViolated, "sweep found no direction with the target count");
}

ConvexRegion ambient_box(std::span<const Point> polygon, std::span<const ColoredPoint> blue,
                         std::span<const ColoredPoint> red) {
  std::vector<Point> all(polygon.begin(), polygon.end());
  for (const auto& p : blue) all.push_back(p.point);
  for (const auto& p : red) all.push_back(p.point);
  return bounding_region(all);
}

Partition plane_partition(std::span<const Point> polygon, std::span<const ColoredPoint> blue,
                          std::span<const ColoredPoint> red) {
  const int s = static_cast<int>(polygon.size());
  if (s < 3 || !is_convex_cw(polygon))
    throw PartitionError(ErrorKind::HypothesisViolated, "polygon must be convex, clockwise, with at least 3 vertices");
  const ConvexRegion poly = ConvexRegion::from_vertices({polygon.begin(), polygon.end()});
  for (const auto& b : blue)
    if (region_contains(poly, b.point) != Containment::Interior)
      throw PartitionError(ErrorKind::HypothesisViolated, "blue #" + std::to_string(b.id) + " not inside the polygon");
  for (const auto& r : red)
    if (region_contains(poly, r.point) != Containment::Outside)
      throw PartitionError(ErrorKind::HypothesisViolated, "red #" + std::to_string(r.id) + " not outside the polygon");
  if (static_cast<int>(blue.size()) - static_cast<int>(red.size()) != s)
    throw PartitionError(ErrorKind::HypothesisViolated, "polygon size must equal |blue| - |red|");
  const auto pts = concat(blue, red);
  {
    std::vector<Point> all = positions(pts);
    all.insert(all.end(), polygon.begin(), polygon.end());
    if (auto bad = general_position(all))
      throw PartitionError(ErrorKind::HypothesisViolated, "points " + std::to_string(bad->i) + ", " +
                                                              std::to_string(bad->j) + ", " + std::to_string(bad->k) +
                                                              " are collinear");
  }
  const ConvexRegion box = ambient_box(polygon, blue, red);
  auto p = [&](int i) -> const Point& { return polygon[static_cast<std::size_t>((i - 1) % s)]; };

  if (s == 3) return split_by_triangle(box, {p(1), p(2), p(3)}, pts, Targets{1, 1, 1});

  // Right-side discrepancy of p_i -> p_1 over a point subset.
  auto right_disc = [&](int i, std::span<const ColoredPoint> subset) {
    return side_discrepancy(DirectedLine(p(i), p(1)), Side::Right, subset);
  };
  auto blues_on = [&](const DirectedLine& l, Side side, std::span<const ColoredPoint> subset) {
    int n = 0;
    for (const auto& q : subset)
      if (q.color == Color::Blue && side_of(l, q.point) == side) ++n;
    return n;
  };

  int j = -1;
  for (int i = 2; i <= s - 1 && j < 0; ++i)
    if (right_disc(i, pts) <= i - 1 && right_disc(i + 1, pts) >= i) j = i;
  if (j < 0) throw PartitionError(ErrorKind::InvalidChain, "no left/right partitionable pair at p_1");

  const DirectedLine to_pj(p(j), p(1));
  const DirectedLine to_pj1(p(j + 1), p(1));
  const int n_first = j - 1 - blues_on(to_pj, Side::Right, pts);
  const int n_last = s - j - blues_on(to_pj1, Side::Left, pts);
  int reds_in_union = 0;
  for (const auto& q : pts)
    if (q.color == Color::Red && (side_of(to_pj, q.point) == Side::Right || side_of(to_pj1, q.point) == Side::Left))
      ++reds_in_union;

  std::vector<Point> around(polygon.begin(), polygon.end());
  around.push_back(p(1));  // closes the chain p_{j+1}..p_s, p_1

  if (n_first + n_last >= -reds_in_union) {
    Partition three = split_by_triangle(box, {p(1), p(j), p(j + 1)}, pts, Targets{j - 1, 1, s - j});
    const auto o1 = three.members(pts, 0);
    const auto o2 = three.members(pts, 1);
    const auto o3 = three.members(pts, 2);
    Partition out = chain_rec(three.regions[0], p(1), std::span<const Point>(around).first(static_cast<std::size_t>(j)), o1);
    append(out, single_region(three.regions[1], o2), o2);
    append(out, chain_rec(three.regions[2], p(1), std::span<const Point>(around).subspan(static_cast<std::size_t>(j)), o3),
           o3);
    return out;
  }

  // The triangle at p_1 fails its conditions: peel off the cone Q* first.
  std::vector<ColoredPoint> reds;
  for (const auto& q : pts)
    if (q.color == Color::Red) reds.push_back(q);
  const DirectedLine l = find_halfline(p(1), to_pj, to_pj1, reds, n_first);
  auto star = clip(box, to_pj, Side::Right);
  if (star) star = clip(*star, l, Side::Right);
  if (!star) throw PartitionError(ErrorKind::InvalidChain, "half-line cone is empty");
  std::vector<ColoredPoint> star_pts, rest_pts;
  for (const auto& q : pts) {
    if (side_of(to_pj, q.point) == Side::Right && side_of(l, q.point) == Side::Right)
      star_pts.push_back(q);
    else
      rest_pts.push_back(q);
  }
  Partition out = chain_rec(*star, p(1), std::span<const Point>(around).first(static_cast<std::size_t>(j)), star_pts);

  // Q' = leva(l) u leva(p_j p_1) holds the chain p_j..p_s, p_1 with discrepancy s - j + 1.
  auto rest_right = [&](int k) { return right_disc(k, rest_pts); };
  int k = -1;
  for (int i = j + 1; i <= s - 1 && k < 0; ++i)
    if (rest_right(i) <= i - j && rest_right(i + 1) >= i + 1 - j) k = i;
  if (k < 0) throw PartitionError(ErrorKind::InvalidChain, "no left/right partitionable pair in the remainder");

  Partition three = split_by_triangle(box, {p(1), p(k), p(k + 1)}, rest_pts, Targets{k - j, 1, s - k});
  std::vector<ConvexRegion> pieces;
  for (const auto& region : three.regions) {
    auto cut = outside_cone(region, to_pj, l);
    if (!cut) throw PartitionError(ErrorKind::InvalidChain, "wedge vanished outside the half-line cone");
    pieces.push_back(*cut);
  }
  const auto o1 = three.members(rest_pts, 0);
  const auto o2 = three.members(rest_pts, 1);
  const auto o3 = three.members(rest_pts, 2);
  append(out,
         chain_rec(pieces[0], p(1),
                   std::span<const Point>(around).subspan(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - j + 1)),
                   o1),
         o1);
  append(out, single_region(pieces[1], o2), o2);
  append(out, chain_rec(pieces[2], p(1), std::span<const Point>(around).subspan(static_cast<std::size_t>(k)), o3), o3);
  return out;
}

}  // namespace altpath::partition
