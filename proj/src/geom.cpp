#include "altpath/geom.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

namespace altpath {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(const std::string& text) {
  static const std::regex shape(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(text, shape)) throw std::invalid_argument("bad number '" + text + "'");
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_neg = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      exp_neg = exp_text[0] == '-';
      exp_text = exp_text.substr(1);
    }
    if (exp_text.size() > 6) throw std::invalid_argument("exponent too large in '" + text + "'");
    exponent = std::stol(exp_text) * (exp_neg ? -1 : 1);
  }
  std::string int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  mpz_class mantissa(int_part + frac_part, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational r(mantissa);
  if (exponent > 0) r *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) r /= pow10(static_cast<unsigned long>(-exponent));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    std::string num_digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
    if (!all_digits(num_digits) || !all_digits(den)) throw std::invalid_argument("bad rational '" + text + "'");
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    mpz_class n(num_digits, 10);
    if (!num.empty() && num[0] == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Point::Point(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
  fx_ = x_.get_d();
  fy_ = y_.get_d();
}

std::string to_string(const Point& p) { return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")"; }

Point operator+(const Point& a, const Point& b) { return Point(a.x() + b.x(), a.y() + b.y()); }
Point operator-(const Point& a, const Point& b) { return Point(a.x() - b.x(), a.y() - b.y()); }
Point operator*(const Rational& k, const Point& p) { return Point(k * p.x(), k * p.y()); }
Rational cross(const Point& u, const Point& v) { return u.x() * v.y() - u.y() * v.x(); }
Rational dot(const Point& u, const Point& v) { return u.x() * v.x() + u.y() * v.y(); }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  // Filter: inputs carry relative error <= 2^-52 from truncation; the
  // accumulated error of the double determinant is below 33 * 2^-52 * M^2.
  const double ax = a.approx_x(), ay = a.approx_y();
  const double bx = b.approx_x(), by = b.approx_y();
  const double cx = c.approx_x(), cy = c.approx_y();
  const double m = std::max({std::fabs(ax), std::fabs(ay), std::fabs(bx), std::fabs(by), std::fabs(cx), std::fabs(cy)});
  if (m > 1e-100 && m < 1e100) {
    const double det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    const double bound = 64.0 * std::numeric_limits<double>::epsilon() * m * m;
    if (det > bound) return Orientation::CounterClockwise;
    if (det < -bound) return Orientation::Clockwise;
  }
  const Rational det = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  const int s = sgn(det);
  return s > 0 ? Orientation::CounterClockwise : s < 0 ? Orientation::Clockwise : Orientation::Collinear;
}

DirectedLine::DirectedLine(Point from, Point to) : a(std::move(from)), b(std::move(to)) {
  if (a == b) throw std::invalid_argument("directed line needs two distinct points");
}

Side side_of(const DirectedLine& l, const Point& p) {
  switch (orientation(l.a, l.b, p)) {
    case Orientation::CounterClockwise: return Side::Left;
    case Orientation::Clockwise: return Side::Right;
    default: return Side::On;
  }
}

Segment::Segment(Point from, Point to) : p(std::move(from)), q(std::move(to)) {
  if (p == q) throw std::invalid_argument("segment needs two distinct endpoints");
}

namespace {

// c collinear with [a, b]: does it lie on the closed segment?
bool on_segment(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= c.y() && c.y() <= std::max(a.y(), b.y());
}

}  // namespace

SegmentRelation segments_relation(const Segment& s1, const Segment& s2) {
  const int o1 = orient_sign(s1.p, s1.q, s2.p);
  const int o2 = orient_sign(s1.p, s1.q, s2.q);
  const int o3 = orient_sign(s2.p, s2.q, s1.p);
  const int o4 = orient_sign(s2.p, s2.q, s1.q);
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::ProperCross;

  const bool meet = (o1 == 0 && on_segment(s1.p, s1.q, s2.p)) ||
                    (o2 == 0 && on_segment(s1.p, s1.q, s2.q)) || (o3 == 0 && on_segment(s2.p, s2.q, s1.p)) ||
                    (o4 == 0 && on_segment(s2.p, s2.q, s1.q));
  if (!meet) return SegmentRelation::Disjoint;

  const Point* shared = nullptr;
  const Point* other1 = nullptr;
  const Point* other2 = nullptr;
  int shared_count = 0;
  for (const Point* e1 : {&s1.p, &s1.q}) {
    for (const Point* e2 : {&s2.p, &s2.q}) {
      if (*e1 == *e2) {
        ++shared_count;
        shared = e1;
        other1 = (e1 == &s1.p) ? &s1.q : &s1.p;
        other2 = (e2 == &s2.p) ? &s2.q : &s2.p;
      }
    }
  }
  if (shared_count != 1) return SegmentRelation::Touch;
  const bool collinear = o1 == 0 && o2 == 0;
  if (!collinear) return SegmentRelation::SharedEndpoint;
  return sgn(dot(*other1 - *shared, *other2 - *shared)) < 0 ? SegmentRelation::SharedEndpoint
                                                              : SegmentRelation::Touch;
}

std::optional<ViolatingTriple> general_position(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(points[i], points[j], points[k]) == Orientation::Collinear) return ViolatingTriple{i, j, k};
  return std::nullopt;
}

namespace {

std::vector<Point> drop_repeats_and_collinear(std::vector<Point> loop) {
  bool changed = true;
  while (changed && loop.size() >= 3) {
    changed = false;
    std::vector<Point> next;
    next.reserve(loop.size());
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = next.empty() ? loop[(i + n - 1) % n] : next.back();
      const Point& cur = loop[i];
      const Point& nxt = loop[(i + 1) % n];
      if (cur == prev || cur == nxt || orientation(prev, cur, nxt) == Orientation::Collinear) {
        changed = true;
        continue;
      }
      next.push_back(cur);
    }
    loop = std::move(next);
  }
  if (loop.size() == 2 && loop[0] == loop[1]) loop.pop_back();
  return loop;
}

Rational signed_area2(const std::vector<Point>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

}  // namespace

std::optional<ConvexRegion> make_region(std::vector<Point> loop) {
  loop = drop_repeats_and_collinear(std::move(loop));
  if (loop.size() < 3) return std::nullopt;
  const Rational area = signed_area2(loop);
  if (area == 0) return std::nullopt;
  if (area > 0) std::reverse(loop.begin(), loop.end());
  return ConvexRegion(std::move(loop));
}

ConvexRegion ConvexRegion::from_vertices(std::vector<Point> vertices) {
  auto region = make_region(std::move(vertices));
  if (!region) throw InvalidRegion("region has no interior");
  const auto& v = region->vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (orientation(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) != Orientation::Clockwise)
      throw InvalidRegion("region is not convex");
  }
  // A self-winding star passes the local turn test; a fan from vertex 0 does not.
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (orientation(v[0], v[i], v[i + 1]) != Orientation::Clockwise) throw InvalidRegion("region is not simple");
  }
  return *region;
}

bool operator==(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.size() != b.size()) return false;
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  auto it = std::find(vb.begin(), vb.end(), va[0]);
  if (it == vb.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - vb.begin());
  for (std::size_t i = 0; i < va.size(); ++i)
    if (va[i] != vb[(i + off) % vb.size()]) return false;
  return true;
}

ConvexRegion convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateHull("fewer than three distinct points");
  // Monotone chain, counter-clockwise, strict turns only.
  std::vector<Point> hull;
  hull.reserve(2 * pts.size());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const Point& p : pts) {
      while (hull.size() >= start + 2 &&
             orientation(hull[hull.size() - 2], hull.back(), p) != Orientation::CounterClockwise)
        hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  if (hull.size() < 3) throw DegenerateHull("points are collinear");
  std::reverse(hull.begin(), hull.end());
  auto region = make_region(std::move(hull));
  if (!region) throw DegenerateHull("points are collinear");
  return *region;
}

Point line_intersection(const DirectedLine& l1, const DirectedLine& l2) {
  const Point d1 = l1.direction();
  const Point d2 = l2.direction();
  const Rational denom = cross(d1, d2);
  if (denom == 0) throw std::invalid_argument("parallel lines have no unique intersection");
  const Rational t = cross(l2.a - l1.a, d2) / denom;
  return Point(l1.a.x() + t * d1.x(), l1.a.y() + t * d1.y());
}

std::optional<ConvexRegion> clip(const ConvexRegion& region, const DirectedLine& l, Side keep) {
  const int want = keep == Side::Left ? 1 : -1;
  const auto& v = region.vertices();
  const std::size_t n = v.size();
  std::vector<int> s(n);
  bool any_out = false;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = orient_sign(l.a, l.b, v[i]) * want;
    any_out = any_out || s[i] < 0;
  }
  if (!any_out) return region;
  std::vector<Point> out;
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (s[i] >= 0) out.push_back(v[i]);
    if ((s[i] > 0 && s[j] < 0) || (s[i] < 0 && s[j] > 0))
      out.push_back(line_intersection(DirectedLine(v[i], v[j]), l));
  }
  return make_region(std::move(out));
}

Containment region_contains(const ConvexRegion& region, const Point& p) {
  bool boundary = false;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const int s = orient_sign(region.vertex(i), region.vertex(i + 1), p);
    if (s > 0) return Containment::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Containment::Boundary : Containment::Interior;
}

std::optional<ConvexRegion> region_intersection(const ConvexRegion& r1, const ConvexRegion& r2) {
  std::optional<ConvexRegion> acc = r1;
  for (std::size_t i = 0; i < r2.size() && acc; ++i) acc = clip(*acc, r2.edge(i), Side::Right);
  return acc;
}

Rational region_area2(const ConvexRegion& region) { return -signed_area2(region.vertices()); }

ConvexRegion bounding_region(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("bounding_region needs at least one point");
  Rational minx = points[0].x(), maxx = minx, miny = points[0].y(), maxy = miny;
  for (const Point& p : points) {
    minx = std::min(minx, p.x());
    maxx = std::max(maxx, p.x());
    miny = std::min(miny, p.y());
    maxy = std::max(maxy, p.y());
  }
  Rational spread = std::max({Rational(maxx - minx), Rational(maxy - miny), Rational(1)});
  const Rational base = 3 * spread;
  // Each corner moves along a parabola as `step` grows; a line through two
  // input points meets it at most twice, so the search terminates.
  for (long step = 0;; ++step) {
    const Rational mx = base + step, my = base + step * step;
    const std::array<Point, 4> corners = {Point(minx - mx, miny - my), Point(minx - mx, maxy + my),
                                          Point(maxx + mx, maxy + my), Point(maxx + mx, miny - my)};
    bool clean = true;
    for (const Point& c : corners) {
      for (std::size_t i = 0; i < points.size() && clean; ++i)
        for (std::size_t j = i + 1; j < points.size() && clean; ++j)
          if (points[i] != points[j] && orientation(points[i], points[j], c) == Orientation::Collinear) clean = false;
    }
    if (clean) return ConvexRegion::from_vertices({corners.begin(), corners.end()});
  }
}

Point ray_exit(const ConvexRegion& region, const Point& origin, const Point& dir) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const Point e = region.vertex(i + 1) - region.vertex(i);
    const Rational rate = cross(e, dir);
    if (sgn(rate) <= 0) continue;  // moving further inside this edge's half-plane
    const Rational t = -cross(e, origin - region.vertex(i)) / rate;
    if (!best || t < *best) best = t;
  }
  if (!best || sgn(*best) <= 0) throw std::invalid_argument("ray does not leave the region forward");
  return origin + (*best) * dir;
}

Point normalize_inf(const Point& v) {
  Rational m = std::max(Rational(abs(v.x())), Rational(abs(v.y())));
  if (m == 0) throw std::invalid_argument("zero vector");
  return Point(v.x() / m, v.y() / m);
}

Point centroid(std::span<const Point> points) {
  Rational sx = 0, sy = 0;
  for (const Point& p : points) {
    sx += p.x();
    sy += p.y();
  }
  const Rational n(static_cast<long>(points.size()));
  return Point(sx / n, sy / n);
}

}  // namespace altpath
