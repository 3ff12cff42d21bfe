// Exact planar geometry over arbitrary-precision rationals.
//
// Every predicate in this header is exact. Points carry a cached double
// approximation that the orientation test uses as a filter; whenever the
// filter cannot certify the sign, the determinant is evaluated in GMP.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace altpath {

using Rational = mpq_class;

/// Parses "num/den", an integer, or a decimal such as "-1.25" into an exact
/// rational. Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

/// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& value);

class Point {
 public:
  Point() : Point(Rational(0), Rational(0)) {}
  Point(Rational x, Rational y);
  Point(long x, long y) : Point(Rational(x), Rational(y)) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  double approx_x() const { return fx_; }
  double approx_y() const { return fy_; }

  friend bool operator==(const Point& a, const Point& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    return a.x_ < b.x_ || (a.x_ == b.x_ && a.y_ < b.y_);
  }

 private:
  Rational x_, y_;
  double fx_, fy_;
};

std::string to_string(const Point& p);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& k, const Point& p);
Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };
enum class Side { Right = -1, On = 0, Left = 1 };

Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Sign of cross(b - a, c - a) as an integer in {-1, 0, 1}.
inline int orient_sign(const Point& a, const Point& b, const Point& c) {
  return static_cast<int>(orientation(a, b, c));
}

struct DirectedLine {
  Point a, b;

  DirectedLine(Point from, Point to);
  Point direction() const { return b - a; }
  DirectedLine reversed() const { return DirectedLine(b, a); }
};

Side side_of(const DirectedLine& l, const Point& p);

struct Segment {
  Point p, q;

  Segment(Point from, Point to);
};

enum class SegmentRelation { Disjoint, ProperCross, SharedEndpoint, Touch };

SegmentRelation segments_relation(const Segment& s1, const Segment& s2);

/// Index triple (i < j < k) of collinear points.
struct ViolatingTriple {
  std::size_t i, j, k;
  friend bool operator==(const ViolatingTriple&, const ViolatingTriple&) = default;
};

/// std::nullopt when no three points are collinear; otherwise the
/// lexicographically smallest collinear index triple.
std::optional<ViolatingTriple> general_position(std::span<const Point> points);

class DegenerateHull : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRegion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bounded, strictly convex polygon with positive area, vertices clockwise.
class ConvexRegion {
 public:
  /// Normalizes the loop (drops repeated and collinear vertices, accepts either
  /// orientation) and throws InvalidRegion when fewer than three vertices
  /// remain or the loop is not convex.
  static ConvexRegion from_vertices(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Directed edge i runs from vertex(i) to vertex(i + 1); the interior is on its right.
  DirectedLine edge(std::size_t i) const { return DirectedLine(vertex(i), vertex(i + 1)); }

  /// Same vertex cycle, possibly rotated.
  friend bool operator==(const ConvexRegion& a, const ConvexRegion& b);

 private:
  explicit ConvexRegion(std::vector<Point> v) : vertices_(std::move(v)) {}
  std::vector<Point> vertices_;

  friend std::optional<ConvexRegion> make_region(std::vector<Point> loop);
};

/// Internal constructor shared by clipping and hulls: cleans a loop that is
/// already known to be convex; std::nullopt if it encloses no area.
std::optional<ConvexRegion> make_region(std::vector<Point> loop);

ConvexRegion convex_hull(std::span<const Point> points);

/// Closed half-plane `keep` of l intersected with the region. std::nullopt
/// when the intersection has no interior.
std::optional<ConvexRegion> clip(const ConvexRegion& region, const DirectedLine& l, Side keep);

enum class Containment { Interior, Boundary, Outside };

Containment region_contains(const ConvexRegion& region, const Point& p);

std::optional<ConvexRegion> region_intersection(const ConvexRegion& r1, const ConvexRegion& r2);

/// Twice the area, always positive.
Rational region_area2(const ConvexRegion& region);

/// Axis-aligned box with a margin of three times the coordinate spread
/// (spread at least 1) around the points.
ConvexRegion bounding_region(std::span<const Point> points);

/// Intersection point of the two (non-parallel) supporting lines.
Point line_intersection(const DirectedLine& l1, const DirectedLine& l2);

/// First point where the ray origin + t*dir (t > 0) leaves the region.
/// Requires origin inside or on the boundary with dir pointing inward.
Point ray_exit(const ConvexRegion& region, const Point& origin, const Point& dir);

/// Rescales v by 1/max(|v.x|, |v.y|).
Point normalize_inf(const Point& v);

Point centroid(std::span<const Point> points);

}  // namespace altpath
