// Instance, path and partition files (JSON with exact rational strings), the
// seeded instance generator and SVG rendering.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "altpath/path.hpp"
#include "altpath/types.hpp"

namespace altpath::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_, column_;
  std::string reason_;
};

class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kFormatVersion = 1;

/// Ids are implicit: red i has id i, blue j has id |red| + j.
struct InstanceFile {
  Instance instance;
  std::optional<std::uint64_t> seed;
  nlohmann::ordered_json metadata;  // null when absent
};

InstanceFile parse_instance_file(const std::string& text);
Instance parse_instance(const std::string& text);
std::string emit_instance(const InstanceFile& file);
std::string emit_instance(const Instance& inst);

AltPath parse_path(const std::string& text);
std::string emit_path(const AltPath& path);

struct PartitionFile {
  ConvexRegion ambient;
  Partition partition;
};

PartitionFile parse_partition(const std::string& text);
std::string emit_partition(const ConvexRegion& ambient, const Partition& part);

struct GenParams {
  int s = 3;
  int n_blue = 3;
  int n_red_outside = 0;
  std::uint64_t seed = 0;
  long coordinate_range = 1000;
};

/// Throws std::invalid_argument when the counts cannot form an instance.
void check_params(const GenParams& p);

/// Deterministic instance: polygon reds first (polygon = 0..s-1), then the
/// exterior reds; all coordinates are integers in [-range, range].
Instance generate(const GenParams& p);

std::string render_svg(const Instance& inst, const AltPath* path = nullptr, const Partition* part = nullptr);

}  // namespace altpath::io
