// Shared generators and independent reference computations for the tests.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "altpath/geom.hpp"
#include "altpath/types.hpp"

namespace testsupport {

using altpath::Point;
using altpath::Rational;

// Orientation sign from an integer determinant after clearing denominators.
inline int det_sign(const Point& a, const Point& b, const Point& c) {
  mpz_class den = 1;
  for (const Rational* v : {&a.x(), &a.y(), &b.x(), &b.y(), &c.x(), &c.y()}) den = lcm(den, v->get_den());
  auto z = [&](const Rational& v) { return mpz_class(v.get_num() * (den / v.get_den())); };
  const mpz_class det = (z(b.x()) - z(a.x())) * (z(c.y()) - z(a.y())) - (z(b.y()) - z(a.y())) * (z(c.x()) - z(a.x()));
  return sgn(det);
}

inline bool collinear_triple_exists(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (det_sign(pts[i], pts[j], pts[k]) == 0) return true;
  return false;
}

inline Rational random_rational(std::mt19937_64& rng, long range, long max_den) {
  std::uniform_int_distribution<long> num(-range * max_den, range * max_den), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Point random_point(std::mt19937_64& rng, long range, long max_den = 1) {
  return Point(random_rational(rng, range, max_den), random_rational(rng, range, max_den));
}

// Random integer points in [-range, range]^2 with no three collinear.
inline std::vector<Point> random_general_points(std::mt19937_64& rng, std::size_t n, long range) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point q = random_point(rng, range);
    pts.push_back(q);
    if (collinear_triple_exists(pts)) pts.pop_back();
  }
  return pts;
}

inline int count_discrepancy(const std::vector<altpath::ColoredPoint>& pts) {
  int d = 0;
  for (const auto& p : pts) d += p.color == altpath::Color::Blue ? 1 : -1;
  return d;
}

struct RandomScene {
  std::vector<Point> polygon;  // clockwise
  std::vector<altpath::ColoredPoint> blue, red;  // red: points outside the polygon only
};

// Convex polygon on a circle of radius range/2, blues inside, reds outside,
// everything in general position. Ids: blues from 0, reds after them.
inline RandomScene random_scene(std::mt19937_64& rng, int s, int n_blue, int n_red, long range) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_int_distribution<long> coord(-range, range);
  for (;;) {
    std::vector<double> th;
    for (int k = 0; k < s; ++k) th.push_back(angle(rng));
    std::sort(th.begin(), th.end(), std::greater<>());
    RandomScene sc;
    for (double t : th)
      sc.polygon.emplace_back(std::lround(range / 2.0 * std::cos(t)), std::lround(range / 2.0 * std::sin(t)));
    std::vector<Point> all = sc.polygon;
    bool convex = !collinear_triple_exists(all);
    for (int k = 0; k < s && convex; ++k)
      convex = det_sign(sc.polygon[k], sc.polygon[(k + 1) % s], sc.polygon[(k + 2) % s]) < 0;
    if (!convex) continue;
    auto inside = [&](const Point& q) {
      for (int k = 0; k < s; ++k)
        if (det_sign(sc.polygon[k], sc.polygon[(k + 1) % s], q) >= 0) return false;
      return true;
    };
    int attempts = 0;
    auto place = [&](bool want_inside, std::vector<altpath::ColoredPoint>& into, altpath::Color color, int id) {
      while (attempts++ < 200000) {
        const Point q(coord(rng), coord(rng));
        if (inside(q) != want_inside) continue;
        all.push_back(q);
        if (collinear_triple_exists(all)) {
          all.pop_back();
          continue;
        }
        into.push_back({id, q, color});
        return true;
      }
      return false;
    };
    bool ok = true;
    for (int k = 0; k < n_blue && ok; ++k) ok = place(true, sc.blue, altpath::Color::Blue, k);
    for (int k = 0; k < n_red && ok; ++k) ok = place(false, sc.red, altpath::Color::Red, n_blue + k);
    if (ok) return sc;
  }
}

}  // namespace testsupport
