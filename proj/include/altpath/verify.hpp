// Independent checks for paths and partitions, plus an exhaustive oracle for
// tiny instances.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altpath/geom.hpp"
#include "altpath/types.hpp"

namespace altpath {

enum class ViolationKind {
  NotAlternating,
  NotHamiltonian,
  Crossing,
  NotConvex,
  BadDiagonal,
  BadDiscrepancy,
  CoverageGap,
  Overlap,
};

const char* to_string(ViolationKind kind);

/// First problem found. Unused fields stay at -1; for Crossing and Overlap,
/// i and j are segment or region indices; for CoverageGap, id is the point.
struct ViolationReport {
  explicit ViolationReport(ViolationKind k, std::string text = {}) : kind(k), details(std::move(text)) {}

  ViolationKind kind;
  int i = -1, j = -1;
  int got = 0, want = 0;
  int id = -1;
  std::string details;

  std::string describe() const;
};

/// std::nullopt means the object is valid.
using Verdict = std::optional<ViolationReport>;

Verdict verify_path(const std::vector<ColoredPoint>& points, const AltPath& path);

/// `polygon` is either a closed loop with one vertex per region (region i
/// carries polygon[i] polygon[i+1 mod s]) or an open chain with one more
/// vertex than there are regions.
Verdict verify_partition(const ConvexRegion& ambient, const std::vector<Point>& polygon,
                         const std::vector<ColoredPoint>& red, const std::vector<ColoredPoint>& blue,
                         const Partition& part, const std::vector<int>& want);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleBudget = 12;

/// Backtracking search for a non-crossing alternating Hamiltonian path (or
/// cycle). With `endpoints`, an open path must run from the first id to the
/// second. Throws BudgetExceeded above kOracleBudget points.
std::optional<AltPath> brute_force_path(const std::vector<ColoredPoint>& red, const std::vector<ColoredPoint>& blue,
                                        bool closed, std::optional<std::pair<int, int>> endpoints = std::nullopt);

}  // namespace altpath
