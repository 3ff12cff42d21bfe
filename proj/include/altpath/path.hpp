// Alternating Hamiltonian paths: the separated construction and the full
// polygon-with-interior-blues solver built on plane_partition.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altpath/geom.hpp"
#include "altpath/types.hpp"

namespace altpath {

struct Instance {
  std::vector<ColoredPoint> blue;
  std::vector<ColoredPoint> red;
  std::vector<std::size_t> polygon;  // indices into `red`, clockwise

  std::vector<Point> polygon_points() const;
  /// Reds that are not polygon vertices.
  std::vector<ColoredPoint> exterior_red() const;
  std::vector<ColoredPoint> all_points() const;
};

enum class PathErrorKind { NotSeparated, SingleColor, HypothesisViolated, AugmentationFailed };

const char* to_string(PathErrorKind kind);

class PathError : public std::runtime_error {
 public:
  PathError(PathErrorKind kind, const std::string& what);
  PathErrorKind kind() const { return kind_; }

 private:
  PathErrorKind kind_;
};

/// Throws PathError(HypothesisViolated) naming the first broken invariant.
void validate(const Instance& inst);

/// The hull edge of conv(X) that crosses `sep` furthest along its direction,
/// as (red id, blue id). No point may lie on `sep`.
std::pair<int, int> top_alternating_edge(const std::vector<ColoredPoint>& x, const DirectedLine& sep);

/// Open alternating path from r1 to r2 through every point, for |R| = |B| + 1
/// with the line r1 r2 separating the reds from the blues.
AltPath separated_path(const std::vector<ColoredPoint>& red, const std::vector<ColoredPoint>& blue, int r1, int r2);

/// Closed cycle for |red| = |blue|, starting at polygon vertex p_1 and
/// reaching p_2 before p_s.
AltPath closed_cycle(const Instance& inst);

/// Open path when the color classes differ in size by one. An auxiliary
/// point of the minority color is drawn from a generator seeded with `seed`.
AltPath open_path(const Instance& inst, std::uint64_t seed = 0);

/// closed_cycle or open_path depending on the class sizes.
AltPath solve(const Instance& inst, std::uint64_t seed = 0);

}  // namespace altpath
