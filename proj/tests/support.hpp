#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "crofton/geometry.hpp"

namespace test_support {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// Random value polyline: 2..max_segments segments, ordinates in [lo, hi].
inline crofton::Polyline random_polyline(std::mt19937_64& rng,
                                         int max_segments = 8,
                                         double lo = -3.0, double hi = 3.0) {
  const int n = 2 + static_cast<int>(rng() % (max_segments - 1));
  std::vector<double> values(n);
  for (double& v : values) v = uniform(rng, lo, hi);
  return crofton::polyline_from_values(values);
}

// Gift-wrapping hull, independent of the library implementation. Intended
// for integer coordinates where the cross products are exact. Returns the
// counter-clockwise cycle without collinear boundary points, or the two
// extreme points for collinear input.
inline std::vector<crofton::Point2> jarvis_hull(
    std::vector<crofton::Point2> pts) {
  using crofton::Point2;
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  bool collinear = true;
  for (std::size_t i = 2; i < pts.size() && collinear; ++i)
    collinear = cross(pts[0], pts[1], pts[i]) == 0.0;
  if (collinear) return {pts.front(), pts.back()};

  std::vector<Point2> hull;
  Point2 current = pts.front();  // lexicographic minimum is on the hull
  do {
    hull.push_back(current);
    Point2 next = pts[0] == current ? pts[1] : pts[0];
    for (const Point2& candidate : pts) {
      if (candidate == next || candidate == current) continue;
      const double turn = cross(current, next, candidate);
      const auto farther = [&](const Point2& a, const Point2& b) {
        const double da = (a.x - current.x) * (a.x - current.x) +
                          (a.y - current.y) * (a.y - current.y);
        const double db = (b.x - current.x) * (b.x - current.x) +
                          (b.y - current.y) * (b.y - current.y);
        return da > db;
      };
      if (turn < 0.0 || (turn == 0.0 && farther(candidate, next)))
        next = candidate;
    }
    current = next;
  } while (!(current == hull.front()));
  // every remaining point sits left of each hull edge: counter-clockwise
  return hull;
}

// Rotates a hull cycle so it starts at the lexicographically smallest vertex.
inline std::vector<crofton::Point2> canonical_cycle(
    std::vector<crofton::Point2> hull) {
  const auto smallest =
      std::min_element(hull.begin(), hull.end(),
                       [](const crofton::Point2& a, const crofton::Point2& b) {
                         return a.x < b.x || (a.x == b.x && a.y < b.y);
                       });
  std::rotate(hull.begin(), smallest, hull.end());
  return hull;
}

}  // namespace test_support
