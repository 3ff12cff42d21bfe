#include "altpath/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace altpath {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotAlternating: return "NotAlternating";
    case ViolationKind::NotHamiltonian: return "NotHamiltonian";
    case ViolationKind::Crossing: return "Crossing";
    case ViolationKind::NotConvex: return "NotConvex";
    case ViolationKind::BadDiagonal: return "BadDiagonal";
    case ViolationKind::BadDiscrepancy: return "BadDiscrepancy";
    case ViolationKind::CoverageGap: return "CoverageGap";
    case ViolationKind::Overlap: return "Overlap";
  }
  return "?";
}

std::string ViolationReport::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case ViolationKind::Crossing:
    case ViolationKind::Overlap: os << "(" << i << ", " << j << ")"; break;
    case ViolationKind::NotConvex:
    case ViolationKind::BadDiagonal: os << "(" << i << ")"; break;
    case ViolationKind::BadDiscrepancy: os << "(" << i << ", got " << got << ", want " << want << ")"; break;
    case ViolationKind::CoverageGap: os << "(" << id << ")"; break;
    default: break;
  }
  if (!details.empty()) os << ": " << details;
  return os.str();
}

namespace {

ViolationReport report(ViolationKind kind, std::string details) { return ViolationReport(kind, std::move(details)); }

ViolationReport pair_report(ViolationKind kind, int i, int j, std::string details) {
  ViolationReport r = report(kind, std::move(details));
  r.i = i;
  r.j = j;
  return r;
}

ViolationReport gap_report(int id, std::string details) {
  ViolationReport r = report(ViolationKind::CoverageGap, std::move(details));
  r.id = id;
  return r;
}

// Adjacent path segments may only share their common endpoint; all others
// must be disjoint.
bool compatible(const Segment& a, const Segment& b, bool adjacent) {
  const SegmentRelation rel = segments_relation(a, b);
  return adjacent ? rel == SegmentRelation::SharedEndpoint : rel == SegmentRelation::Disjoint;
}

}  // namespace

Verdict verify_path(const std::vector<ColoredPoint>& points, const AltPath& path) {
  std::map<int, const ColoredPoint*> by_id;
  for (const auto& p : points)
    if (!by_id.emplace(p.id, &p).second) return report(ViolationKind::NotHamiltonian, "duplicate point id " + std::to_string(p.id));

  std::set<int> used;
  for (int id : path.order) {
    if (!by_id.count(id)) return report(ViolationKind::NotHamiltonian, "unknown id " + std::to_string(id));
    if (!used.insert(id).second) return report(ViolationKind::NotHamiltonian, "id " + std::to_string(id) + " visited twice");
  }
  for (const auto& p : points)
    if (!used.count(p.id)) return report(ViolationKind::NotHamiltonian, "id " + std::to_string(p.id) + " never visited");

  const std::size_t n = path.order.size();
  if (path.closed && n < 4) return report(ViolationKind::NotAlternating, "a closed path needs at least four vertices");
  for (std::size_t k = 0; k + 1 < n + (path.closed ? 1 : 0); ++k) {
    const auto* a = by_id.at(path.order[k]);
    const auto* b = by_id.at(path.order[(k + 1) % n]);
    if (a->color == b->color)
      return report(ViolationKind::NotAlternating,
                    "ids " + std::to_string(a->id) + " and " + std::to_string(b->id) + " are both " + to_string(a->color));
  }

  std::vector<Segment> segs;
  for (std::size_t k = 0; k + 1 < n; ++k) segs.emplace_back(by_id.at(path.order[k])->point, by_id.at(path.order[k + 1])->point);
  if (path.closed) segs.emplace_back(by_id.at(path.order[n - 1])->point, by_id.at(path.order[0])->point);
  const std::size_t m = segs.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const bool adjacent = b == a + 1 || (path.closed && a == 0 && b == m - 1);
      if (!compatible(segs[a], segs[b], adjacent))
        return pair_report(ViolationKind::Crossing, static_cast<int>(a), static_cast<int>(b),
                           "segments " + std::to_string(a) + " and " + std::to_string(b) + " meet");
    }
  }
  return std::nullopt;
}

Verdict verify_partition(const ConvexRegion& ambient, const std::vector<Point>& polygon,
                         const std::vector<ColoredPoint>& red, const std::vector<ColoredPoint>& blue,
                         const Partition& part, const std::vector<int>& want) {
  const std::size_t count = part.regions.size();
  if (count != want.size())
    return report(ViolationKind::CoverageGap,
                  std::to_string(count) + " regions for " + std::to_string(want.size()) + " targets");
  const bool cyclic = polygon.size() == count;
  if (!cyclic && polygon.size() != count + 1)
    return report(ViolationKind::BadDiagonal, "polygon size does not match the region count");

  for (std::size_t r = 0; r < count; ++r) {
    const auto& v = part.regions[r].vertices();
    const std::size_t n = v.size();
    bool convex = n >= 3;
    for (std::size_t k = 0; k < n && convex; ++k)
      convex = orientation(v[k], v[(k + 1) % n], v[(k + 2) % n]) == Orientation::Clockwise;
    if (!convex) {
      ViolationReport rep = report(ViolationKind::NotConvex, "region vertices do not turn clockwise");
      rep.i = static_cast<int>(r);
      return rep;
    }
    for (const Point& p : v)
      if (region_contains(ambient, p) == Containment::Outside)
        return pair_report(ViolationKind::Overlap, static_cast<int>(r), -1, "region leaves the ambient region");
  }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (region_intersection(part.regions[a], part.regions[b]))
        return pair_report(ViolationKind::Overlap, static_cast<int>(a), static_cast<int>(b), "interiors intersect");
  Rational total = 0;
  for (const auto& region : part.regions) total += region_area2(region);
  if (total != region_area2(ambient))
    return report(ViolationKind::CoverageGap,
                  "regions cover area2 " + to_string(total) + " of " + to_string(region_area2(ambient)));

  for (std::size_t r = 0; r < count; ++r) {
    const Point& u = polygon[r];
    const Point& w = polygon[(r + 1) % polygon.size()];
    if (region_contains(part.regions[r], u) != Containment::Boundary ||
        region_contains(part.regions[r], w) != Containment::Boundary) {
      ViolationReport rep = report(ViolationKind::BadDiagonal, "diagonal endpoint not on the region boundary");
      rep.i = static_cast<int>(r);
      return rep;
    }
  }

  std::vector<ColoredPoint> pts = blue;
  pts.insert(pts.end(), red.begin(), red.end());
  std::set<int> known;
  for (const auto& p : pts) {
    known.insert(p.id);
    auto it = part.assignment.find(p.id);
    if (it == part.assignment.end()) return gap_report(p.id, "point is not assigned");
    if (it->second < 0 || it->second >= static_cast<int>(count)) return gap_report(p.id, "assigned to a missing region");
    if (region_contains(part.regions[static_cast<std::size_t>(it->second)], p.point) == Containment::Outside)
      return gap_report(p.id, "point lies outside its region");
  }
  for (const auto& [id, region] : part.assignment)
    if (!known.count(id)) return gap_report(id, "assignment names an unknown point");

  std::vector<int> disc(count, 0);
  for (const auto& p : pts) disc[static_cast<std::size_t>(part.assignment.at(p.id))] += p.color == Color::Blue ? 1 : -1;
  for (std::size_t r = 0; r < count; ++r) {
    if (disc[r] != want[r]) {
      ViolationReport rep = report(ViolationKind::BadDiscrepancy, "");
      rep.i = static_cast<int>(r);
      rep.got = disc[r];
      rep.want = want[r];
      return rep;
    }
  }
  return std::nullopt;
}

std::optional<AltPath> brute_force_path(const std::vector<ColoredPoint>& red, const std::vector<ColoredPoint>& blue,
                                        bool closed, std::optional<std::pair<int, int>> endpoints) {
  const std::size_t n = red.size() + blue.size();
  if (n > kOracleBudget)
    throw BudgetExceeded(std::to_string(n) + " points exceed the oracle budget of " + std::to_string(kOracleBudget));
  std::vector<ColoredPoint> pts = red;
  pts.insert(pts.end(), blue.begin(), blue.end());
  if (n == 0) return AltPath{{}, closed};

  const long diff = static_cast<long>(red.size()) - static_cast<long>(blue.size());
  if (closed ? diff != 0 : (diff < -1 || diff > 1)) return std::nullopt;

  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  std::vector<Segment> segs;

  std::optional<std::size_t> start_fixed, end_fixed;
  if (endpoints) {
    for (std::size_t k = 0; k < n; ++k) {
      if (pts[k].id == endpoints->first) start_fixed = k;
      if (pts[k].id == endpoints->second) end_fixed = k;
    }
    if (!start_fixed || !end_fixed || closed) return std::nullopt;
  }

  auto fits = [&](const Segment& s, std::size_t skip_front) {
    // The newest segment is adjacent to the previous one; when closing a
    // cycle it is also adjacent to the very first.
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const bool adjacent = k + 1 == segs.size() || (k == 0 && skip_front > 0);
      if (!compatible(s, segs[k], adjacent)) return false;
    }
    return true;
  };

  std::function<bool()> extend = [&]() -> bool {
    const std::size_t last = order.back();
    if (order.size() == n) {
      if (end_fixed && last != *end_fixed) return false;
      if (!closed) return true;
      const Segment back(pts[last].point, pts[order.front()].point);
      return n >= 4 && fits(back, 1);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k] || pts[k].color == pts[last].color) continue;
      if (end_fixed && k == *end_fixed && order.size() + 1 != n) continue;
      const Segment s(pts[last].point, pts[k].point);
      if (!fits(s, 0)) continue;
      used[k] = true;
      order.push_back(k);
      segs.push_back(s);
      if (extend()) return true;
      segs.pop_back();
      order.pop_back();
      used[k] = false;
    }
    return false;
  };

  for (std::size_t first = 0; first < n; ++first) {
    if (start_fixed && first != *start_fixed) continue;
    // A cycle can be rotated to start anywhere, so one start suffices.
    if (closed && first > 0) break;
    if (!closed && diff != 0 && (pts[first].color == Color::Red) != (diff > 0)) continue;
    used[first] = true;
    order = {first};
    if (extend()) {
      AltPath path{{}, closed};
      for (std::size_t k : order) path.order.push_back(pts[k].id);
      return path;
    }
    used[first] = false;
  }
  return std::nullopt;
}

}  // namespace altpath
