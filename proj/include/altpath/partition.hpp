// Equitable convex partitions of bicolored point sets.
//
// Conventions used throughout:
//   * polygons and triangles are clockwise, so the interior lies to the right
//     of every directed edge p_i -> p_{i+1};
//   * the discrepancy of a point set is (#blue) - (#red);
//   * region i of a returned Partition carries the segment p_i p_{i+1} as a
//     diagonal (indices are 0-based in the API).
#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "altpath/geom.hpp"
#include "altpath/types.hpp"

namespace altpath::partition {

/// Per-edge discrepancy targets n_1..n_s.
using Targets = std::vector<int>;

enum class ErrorKind {
  ConditionsViolated,
  NoApexFound,
  ApexAtVertex,
  InvalidFrame,
  SweepInfeasible,
  PointOnLine,
  InvalidChain,
  BracketingViolated,
  HypothesisViolated,
};

const char* to_string(ErrorKind kind);

class PartitionError : public std::runtime_error {
 public:
  PartitionError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }
  /// True for failures that existence results rule out; they indicate a defect.
  bool internal() const {
    return kind_ == ErrorKind::NoApexFound || kind_ == ErrorKind::InvalidChain ||
           kind_ == ErrorKind::SweepInfeasible || kind_ == ErrorKind::BracketingViolated;
  }

 private:
  ErrorKind kind_;
};

int discrepancy(std::span<const ColoredPoint> points);

/// A closed half-plane: the `side` of `line`, boundary included.
struct HalfPlane {
  DirectedLine line;
  Side side;

  bool contains(const Point& p) const {
    const Side s = side_of(line, p);
    return s == Side::On || s == side;
  }
};

/// out(e): the closed half-plane beyond edge `edge_index` of a clockwise polygon.
HalfPlane outer_halfplane(const ConvexRegion& poly, std::size_t edge_index);

struct ConditionsOk {
  friend bool operator==(const ConditionsOk&, const ConditionsOk&) = default;
};
struct SumMismatch {
  int expected;  // |B| - |R|
  int got;       // sum of targets
  friend bool operator==(const SumMismatch&, const SumMismatch&) = default;
};
/// First failing cyclic interval (0-based edge indices, in cyclic order).
struct ViolatedInterval {
  std::vector<int> edges;
  friend bool operator==(const ViolatedInterval&, const ViolatedInterval&) = default;
};
using ConditionsResult = std::variant<ConditionsOk, SumMismatch, ViolatedInterval>;

/// Necessary conditions on a target vector: the sum condition and, for every
/// nonempty cyclic interval I of edges, sum_{i in I} n_i >= -(reds of Q in the
/// union of out(p_i p_{i+1}), i in I). Intervals are tried by length, then start.
ConditionsResult check_conditions(const ConvexRegion& ambient, std::span<const Point> polygon,
                                  std::span<const ColoredPoint> red, std::span<const ColoredPoint> blue,
                                  const Targets& targets);

struct WedgeFrame {
  Point apex;
  std::array<Point, 3> triangle;  // clockwise
  ConvexRegion ambient;
};

/// The three regions cut out of the ambient region by the half-lines from the
/// apex through the triangle vertices; region i contains edge t_i t_{i+1}.
/// With the apex on an edge, that edge's region is out(edge) within the ambient.
std::array<ConvexRegion, 3> wedge_regions(const WedgeFrame& frame);

/// Three-region partition of `ambient` around a clockwise triangle meeting the
/// exact targets. Blue points must lie strictly inside the triangle and red
/// points outside it. The apex is found by exhaustive search over the
/// arrangement of lines through triangle vertices and colored points.
Partition triangle_partition(const ConvexRegion& ambient, const std::array<Point, 3>& triangle,
                             std::span<const ColoredPoint> blue, std::span<const ColoredPoint> red,
                             const Targets& targets);

struct Split {
  Point x;
  DirectedLine line;  // pivot -> x
};

/// Rotates a line about `pivot` from the direction of `arc_from` towards
/// `arc_to` and stops in the first angular gap where the points strictly to
/// the right have discrepancy `target`. x is where the split ray meets the
/// region boundary; no point of `pts` lies on the split line.
Split rotate_split(const ConvexRegion& region, const Point& pivot, const Point& arc_from, const Point& arc_to,
                   std::span<const ColoredPoint> pts, int target);

enum class Partitionability { LeftOnly, RightOnly, Both };

const char* to_string(Partitionability p);

/// Compares the discrepancy to the right of p_i -> anchor with i - 1
/// (i is the 1-based chain index, 2 <= i <= s).
Partitionability classify_diagonal(const Point& p_i, const Point& anchor, int i, int s,
                                   std::span<const ColoredPoint> pts, const ConvexRegion& region);

/// Partition of `region` into s = chain.size() - 1 convex parts for a convex
/// chain p_1..p_{s+1} whose ends lie on the region boundary, closed off by the
/// boundary through `anchor`. Requires s = |blue| - |red|; every part gets
/// discrepancy 1 and region i carries chain[i] chain[i+1] as a diagonal.
Partition chain_partition(const ConvexRegion& region, const Point& anchor, std::span<const Point> chain,
                          std::span<const ColoredPoint> blue, std::span<const ColoredPoint> red);

/// Directed line from p1 into the wedge right of `wedge_right` and left of
/// `wedge_left` (both pass through p1), avoiding every red point, such that
/// exactly -target reds lie right of both `wedge_right` and the result.
DirectedLine find_halfline(const Point& p1, const DirectedLine& wedge_right, const DirectedLine& wedge_left,
                           std::span<const ColoredPoint> red, int target);

/// The bounded stand-in for the whole plane used by plane_partition.
ConvexRegion ambient_box(std::span<const Point> polygon, std::span<const ColoredPoint> blue,
                         std::span<const ColoredPoint> red);

/// Partition of ambient_box(...) into s convex regions, region i carrying the
/// polygon edge p_i p_{i+1} as a diagonal and holding discrepancy exactly 1.
/// Requires a clockwise convex polygon, blues strictly inside, reds strictly
/// outside, s = |blue| - |red| and general position.
Partition plane_partition(std::span<const Point> polygon, std::span<const ColoredPoint> blue,
                          std::span<const ColoredPoint> red);

}  // namespace altpath::partition
