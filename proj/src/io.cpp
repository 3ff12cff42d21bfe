#include "altpath/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace altpath::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

namespace {

using Json = nlohmann::ordered_json;

// Character iterator that remembers the furthest offset the lexer has read,
// which lets the SAX pass below attach a position to every value.
class CountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, const char* base, std::size_t* seen) : p_(p), base_(base), seen_(seen) {}

  const char& operator*() const {
    *seen_ = static_cast<std::size_t>(p_ - base_);
    return *p_;
  }
  CountingIterator& operator++() {
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++p_;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* seen_ = nullptr;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Records the text offset where every value starts, keyed by JSON pointer.
class PositionIndex : public nlohmann::json_sax<Json> {
 public:
  PositionIndex(const std::string& text, const std::size_t* seen) : text_(text), seen_(seen) {}

  std::map<std::string, std::size_t> offsets;

  bool null() override { return value(scalar_start()); }
  bool boolean(bool) override { return value(scalar_start()); }
  bool number_integer(number_integer_t) override { return value(scalar_start()); }
  bool number_unsigned(number_unsigned_t) override { return value(scalar_start()); }
  bool number_float(number_float_t, const string_t&) override { return value(scalar_start()); }
  bool string(string_t&) override { return value(string_start()); }
  bool binary(binary_t&) override { return value(*seen_); }
  bool start_object(std::size_t) override {
    value(*seen_);
    frames_.push_back({false, 0, ""});
    return true;
  }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool end_object() override {
    frames_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    value(*seen_);
    frames_.push_back({true, 0, ""});
    return true;
  }
  bool end_array() override {
    frames_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    error_offset = position == 0 ? 0 : position - 1;
    error_message = ex.what();
    return false;
  }

  std::optional<std::size_t> error_offset;
  std::string error_message;

 private:
  struct Frame {
    bool array;
    std::size_t index;  // next element index for arrays
    std::string key;
  };

  // The lexer has just read the closing quote.
  std::size_t string_start() const {
    std::size_t at = *seen_;
    while (at > 0) {
      --at;
      if (text_[at] != '"') continue;
      std::size_t slashes = 0;
      while (at > slashes && text_[at - slashes - 1] == '\\') ++slashes;
      if (slashes % 2 == 0) return at;
    }
    return 0;
  }

  // Numbers are read one character past their end, literals are not.
  std::size_t scalar_start() const {
    auto part = [&](std::size_t i) { return i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '-' || text_[i] == '+' || text_[i] == '.'); };
    std::size_t at = *seen_;
    if (!part(at) && at > 0) --at;
    while (at > 0 && part(at - 1)) --at;
    return at;
  }

  bool value(std::size_t start) {
    std::string ptr;
    for (std::size_t i = 0; i < frames_.size(); ++i) {
      const Frame& f = frames_[i];
      // Ancestors already advanced past the element that contains us.
      const std::size_t idx = i + 1 == frames_.size() ? f.index : f.index - 1;
      ptr += "/" + (f.array ? std::to_string(idx) : f.key);
    }
    offsets.emplace(ptr, start);
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
    return true;
  }

  const std::string& text_;
  const std::size_t* seen_;
  std::vector<Frame> frames_;
};

// Parsed document plus the position index used for error messages.
class Document {
 public:
  explicit Document(const std::string& text) : text_(text) {
    std::size_t seen = 0;
    PositionIndex index(text, &seen);
    const CountingIterator first(text.data(), text.data(), &seen);
    const CountingIterator last(text.data() + text.size(), text.data(), &seen);
    const bool ok = Json::sax_parse(first, last, &index);
    if (!ok || index.error_offset) {
      const std::size_t at = index.error_offset.value_or(text.size());
      auto [line, column] = line_column(text, at);
      std::string message = index.error_message;
      // nlohmann prefixes its own position; keep only the reason.
      if (auto colon = message.rfind(": "); colon != std::string::npos) message = message.substr(colon + 2);
      throw ParseError(line, column, message.empty() ? "malformed JSON" : message);
    }
    offsets_ = std::move(index.offsets);
    root_ = Json::parse(text);
  }

  const Json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& reason) const {
    std::size_t at = 0;
    if (auto it = offsets_.find(pointer); it != offsets_.end()) at = it->second;
    auto [line, column] = line_column(text_, at);
    throw ParseError(line, column, (pointer.empty() ? std::string("document") : pointer) + ": " + reason);
  }

  const Json& field(const Json& obj, const std::string& at, const std::string& name) const {
    auto it = obj.find(name);
    if (it == obj.end()) fail(at, "missing field \"" + name + "\"");
    return *it;
  }

  void expect_object(const Json& v, const std::string& at, std::initializer_list<const char*> allowed) const {
    if (!v.is_object()) fail(at, "expected an object");
    for (auto it = v.begin(); it != v.end(); ++it) {
      bool known = false;
      for (const char* name : allowed) known = known || it.key() == name;
      if (!known) fail(at + "/" + it.key(), "unknown field \"" + it.key() + "\"");
    }
  }

  void expect_version(const Json& obj) const {
    const Json& v = field(obj, "", "version");
    if (!v.is_number_integer() || v.get<long>() != kFormatVersion)
      fail("/version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
  }

  Rational coordinate(const Json& v, const std::string& at) const {
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_number_float()) fail(at, "write non-integer coordinates as strings");
    if (!v.is_string()) fail(at, "expected a rational string");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
  }

  Point point(const Json& v, const std::string& at) const {
    if (!v.is_array() || v.size() != 2) fail(at, "expected [x, y]");
    return Point(coordinate(v[0], at + "/0"), coordinate(v[1], at + "/1"));
  }

  std::vector<Point> points(const Json& v, const std::string& at) const {
    if (!v.is_array()) fail(at, "expected a list of points");
    std::vector<Point> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(point(v[i], at + "/" + std::to_string(i)));
    return out;
  }

  long integer(const Json& v, const std::string& at, long min_value) const {
    if (!v.is_number_integer()) fail(at, "expected an integer");
    const long n = v.get<long>();
    if (n < min_value) fail(at, "must be at least " + std::to_string(min_value));
    return n;
  }

  ConvexRegion region(const Json& v, const std::string& at) const {
    try {
      return ConvexRegion::from_vertices(points(v, at));
    } catch (const InvalidRegion& e) {
      fail(at, e.what());
    }
  }

 private:
  const std::string& text_;
  std::map<std::string, std::size_t> offsets_;
  Json root_;
};

std::string quoted(const std::string& s) { return Json(s).dump(); }

std::string point_json(const Point& p) { return "[" + quoted(to_string(p.x())) + ", " + quoted(to_string(p.y())) + "]"; }

std::string point_list(const std::vector<Point>& pts, const std::string& indent) {
  if (pts.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += indent + "  " + point_json(pts[i]) + (i + 1 < pts.size() ? ",\n" : "\n");
  return out + indent + "]";
}

template <typename T>
std::string int_list(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

InstanceFile parse_instance_file(const std::string& text) {
  const Document doc(text);
  const Json& root = doc.root();
  doc.expect_object(root, "", {"version", "red", "blue", "polygon", "seed", "metadata"});
  doc.expect_version(root);
  const auto red = doc.points(doc.field(root, "", "red"), "/red");
  const auto blue = doc.points(doc.field(root, "", "blue"), "/blue");
  const Json& poly = doc.field(root, "", "polygon");
  if (!poly.is_array()) doc.fail("/polygon", "expected a list of red indices");

  InstanceFile file;
  Instance& inst = file.instance;
  for (std::size_t i = 0; i < red.size(); ++i) inst.red.push_back({static_cast<int>(i), red[i], Color::Red});
  for (std::size_t j = 0; j < blue.size(); ++j)
    inst.blue.push_back({static_cast<int>(red.size() + j), blue[j], Color::Blue});
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const std::string at = "/polygon/" + std::to_string(i);
    const long k = doc.integer(poly[i], at, 0);
    if (static_cast<std::size_t>(k) >= red.size()) doc.fail(at, "index beyond the red list");
    inst.polygon.push_back(static_cast<std::size_t>(k));
  }
  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned()) doc.fail("/seed", "expected a non-negative integer");
    file.seed = it->get<std::uint64_t>();
  }
  if (auto it = root.find("metadata"); it != root.end()) file.metadata = *it;

  try {
    validate(inst);
  } catch (const PathError& e) {
    throw InvalidInstance(e.what());
  }
  return file;
}

Instance parse_instance(const std::string& text) { return parse_instance_file(text).instance; }

std::string emit_instance(const InstanceFile& file) {
  const Instance& inst = file.instance;
  std::string out = "{\n  \"version\": " + std::to_string(kFormatVersion) + ",\n";
  if (file.seed) out += "  \"seed\": " + std::to_string(*file.seed) + ",\n";
  out += "  \"red\": " + point_list(positions(inst.red), "  ") + ",\n";
  out += "  \"blue\": " + point_list(positions(inst.blue), "  ") + ",\n";
  out += "  \"polygon\": " + int_list(inst.polygon);
  if (!file.metadata.is_null()) out += ",\n  \"metadata\": " + file.metadata.dump();
  return out + "\n}\n";
}

std::string emit_instance(const Instance& inst) { return emit_instance(InstanceFile{inst, std::nullopt, Json()}); }

AltPath parse_path(const std::string& text) {
  const Document doc(text);
  const Json& root = doc.root();
  doc.expect_object(root, "", {"version", "closed", "order"});
  doc.expect_version(root);
  AltPath path;
  const Json& closed = doc.field(root, "", "closed");
  if (!closed.is_boolean()) doc.fail("/closed", "expected true or false");
  path.closed = closed.get<bool>();
  const Json& order = doc.field(root, "", "order");
  if (!order.is_array()) doc.fail("/order", "expected a list of point ids");
  for (std::size_t i = 0; i < order.size(); ++i)
    path.order.push_back(static_cast<int>(doc.integer(order[i], "/order/" + std::to_string(i), 0)));
  return path;
}

std::string emit_path(const AltPath& path) {
  return "{\n  \"version\": " + std::to_string(kFormatVersion) + ",\n  \"closed\": " + (path.closed ? "true" : "false") +
         ",\n  \"order\": " + int_list(path.order) + "\n}\n";
}

PartitionFile parse_partition(const std::string& text) {
  const Document doc(text);
  const Json& root = doc.root();
  doc.expect_object(root, "", {"version", "ambient", "regions", "assignment"});
  doc.expect_version(root);
  PartitionFile file{doc.region(doc.field(root, "", "ambient"), "/ambient"), {}};
  const Json& regions = doc.field(root, "", "regions");
  if (!regions.is_array()) doc.fail("/regions", "expected a list of vertex loops");
  for (std::size_t i = 0; i < regions.size(); ++i)
    file.partition.regions.push_back(doc.region(regions[i], "/regions/" + std::to_string(i)));
  const Json& assignment = doc.field(root, "", "assignment");
  if (!assignment.is_array()) doc.fail("/assignment", "expected a list of [id, region] pairs");
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const std::string at = "/assignment/" + std::to_string(i);
    if (!assignment[i].is_array() || assignment[i].size() != 2) doc.fail(at, "expected [id, region]");
    const int id = static_cast<int>(doc.integer(assignment[i][0], at + "/0", 0));
    const int region = static_cast<int>(doc.integer(assignment[i][1], at + "/1", 0));
    if (!file.partition.assignment.emplace(id, region).second) doc.fail(at, "id assigned twice");
  }
  return file;
}

std::string emit_partition(const ConvexRegion& ambient, const Partition& part) {
  std::string out = "{\n  \"version\": " + std::to_string(kFormatVersion) + ",\n";
  out += "  \"ambient\": " + point_list(ambient.vertices(), "  ") + ",\n";
  out += "  \"regions\": [";
  for (std::size_t i = 0; i < part.regions.size(); ++i)
    out += std::string(i ? "," : "") + "\n    " + point_list(part.regions[i].vertices(), "    ");
  out += part.regions.empty() ? "],\n" : "\n  ],\n";
  out += "  \"assignment\": [";
  bool first = true;
  for (const auto& [id, region] : part.assignment) {
    out += (first ? "" : ", ") + std::string("[") + std::to_string(id) + ", " + std::to_string(region) + "]";
    first = false;
  }
  return out + "]\n}\n";
}

void check_params(const GenParams& p) {
  if (p.s < 3) throw std::invalid_argument("polygon size must be at least 3");
  if (p.n_blue < 0 || p.n_red_outside < 0) throw std::invalid_argument("point counts must be non-negative");
  const long excess = static_cast<long>(p.n_blue) - p.n_red_outside - p.s;
  if (excess < -1 || excess > 1)
    throw std::invalid_argument("need blue - red_outside to equal s, s - 1 or s + 1");
  if (p.coordinate_range < 30) throw std::invalid_argument("coordinate range must be at least 30");
}

Instance generate(const GenParams& p) {
  check_params(p);
  std::mt19937_64 rng(p.seed);
  constexpr long kBudget = 200000;
  long attempts = 0;
  auto spend = [&](const char* what) {
    if (++attempts > kBudget) throw GenerationFailed(std::string("retry budget exhausted while placing ") + what);
  };

  const long radius = p.coordinate_range / 3;
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<Point> poly;
  for (;;) {
    spend("the polygon");
    std::vector<Point> ring;
    for (int i = 0; i < p.s; ++i) {
      const double a = angle(rng);
      ring.emplace_back(std::lround(radius * std::cos(a)), std::lround(radius * std::sin(a)));
    }
    try {
      const ConvexRegion hull = convex_hull(ring);
      if (static_cast<int>(hull.size()) != p.s) continue;
      if (region_area2(hull) < Rational(radius) * radius) continue;
      poly = hull.vertices();
      break;
    } catch (const DegenerateHull&) {
    }
  }
  const ConvexRegion region = ConvexRegion::from_vertices(poly);

  std::vector<Point> placed = poly;
  auto fits = [&](const Point& q) {
    for (std::size_t i = 0; i < placed.size(); ++i)
      for (std::size_t j = i + 1; j < placed.size(); ++j)
        if (orientation(placed[i], placed[j], q) == Orientation::Collinear) return false;
    return true;
  };

  Rational lo_x = poly[0].x(), hi_x = lo_x, lo_y = poly[0].y(), hi_y = lo_y;
  for (const auto& v : poly) {
    lo_x = std::min(lo_x, v.x());
    hi_x = std::max(hi_x, v.x());
    lo_y = std::min(lo_y, v.y());
    hi_y = std::max(hi_y, v.y());
  }
  std::uniform_int_distribution<long> in_x(lo_x.get_num().get_si(), hi_x.get_num().get_si());
  std::uniform_int_distribution<long> in_y(lo_y.get_num().get_si(), hi_y.get_num().get_si());
  std::vector<Point> blue;
  while (static_cast<int>(blue.size()) < p.n_blue) {
    spend("blue points");
    const Point q(in_x(rng), in_y(rng));
    if (region_contains(region, q) != Containment::Interior || !fits(q)) continue;
    blue.push_back(q);
    placed.push_back(q);
  }
  std::uniform_int_distribution<long> anywhere(-p.coordinate_range, p.coordinate_range);
  std::vector<Point> outside;
  while (static_cast<int>(outside.size()) < p.n_red_outside) {
    spend("exterior red points");
    const Point q(anywhere(rng), anywhere(rng));
    if (region_contains(region, q) != Containment::Outside || !fits(q)) continue;
    outside.push_back(q);
    placed.push_back(q);
  }

  Instance inst;
  int id = 0;
  for (const auto& v : poly) inst.red.push_back({id++, v, Color::Red});
  for (const auto& v : outside) inst.red.push_back({id++, v, Color::Red});
  for (const auto& v : blue) inst.blue.push_back({id++, v, Color::Blue});
  for (int i = 0; i < p.s; ++i) inst.polygon.push_back(static_cast<std::size_t>(i));
  return inst;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const AltPath* path, const Partition* part) {
  const auto pts = inst.all_points();
  std::map<int, const ColoredPoint*> by_id;
  for (const auto& p : pts) by_id[p.id] = &p;
  if (path)
    for (int id : path->order)
      if (!by_id.count(id)) throw UnknownId("path references unknown id " + std::to_string(id));
  if (part)
    for (const auto& [id, region] : part->assignment)
      if (!by_id.count(id)) throw UnknownId("partition references unknown id " + std::to_string(id));

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const auto& p : pts) {
    const double x = p.point.approx_x(), y = p.point.approx_y();
    minx = first ? x : std::min(minx, x);
    maxx = first ? x : std::max(maxx, x);
    miny = first ? y : std::min(miny, y);
    maxy = first ? y : std::max(maxy, y);
    first = false;
  }
  const double pad = 0.15 * std::max({maxx - minx, maxy - miny, 1.0});
  const double width = 800.0;
  const double scale = width / (maxx - minx + 2 * pad);
  const double height = (maxy - miny + 2 * pad) * scale;
  auto sx = [&](const Point& p) { return fmt((p.approx_x() - minx + pad) * scale); };
  auto sy = [&](const Point& p) { return fmt((maxy + pad - p.approx_y()) * scale); };
  auto loop = [&](const std::vector<Point>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + sx(vs[i]) + "," + sy(vs[i]);
    return out;
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (part) {
    os << "<g class=\"regions\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\">\n";
    for (const auto& r : part->regions) os << "<polygon class=\"region\" points=\"" << loop(r.vertices()) << "\"/>\n";
    os << "</g>\n";
  }
  os << "<polygon class=\"hull\" points=\"" << loop(inst.polygon_points())
     << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  if (path && !path->order.empty()) {
    os << "<g class=\"path\" stroke=\"#333333\" stroke-width=\"1.2\">\n";
    const std::size_t n = path->order.size();
    const std::size_t edges = path->closed ? n : n - 1;
    for (std::size_t k = 0; k < edges; ++k) {
      const Point& a = by_id.at(path->order[k])->point;
      const Point& b = by_id.at(path->order[(k + 1) % n])->point;
      os << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g class=\"points\">\n";
  for (const auto& p : pts) {
    os << "<circle cx=\"" << sx(p.point) << "\" cy=\"" << sy(p.point) << "\" r=\"4\" ";
    if (p.color == Color::Red)
      os << "fill=\"#c0392b\"/>\n";
    else
      os << "fill=\"white\" stroke=\"#2e6fb7\" stroke-width=\"1.5\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace altpath::io
