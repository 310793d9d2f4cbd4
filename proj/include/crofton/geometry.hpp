#pragma once

#include <cstddef>
#include <vector>

namespace crofton {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Open piecewise-linear plane curve: at least two vertices, consecutive
/// vertices distinct, all coordinates finite.
class Polyline {
 public:
  explicit Polyline(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return verts_; }
  std::size_t segment_count() const { return verts_.size() - 1; }

 private:
  std::vector<Point2> verts_;
};

/// Convex hull of a point set. Non-degenerate hulls are counter-clockwise
/// with no three consecutive collinear vertices; a collinear input yields
/// `degenerate = true` with exactly the two extreme points.
struct ConvexHull {
  std::vector<Point2> hull_vertices;
  bool degenerate = false;
};

struct CurveMetrics {
  double length = 0.0;          // l(curve)
  double hull_perimeter = 0.0;  // delta(curve)
  double inconstancy = 1.0;     // 2*length / hull_perimeter
};

/// Curve through (0,0), (1, values[0]), ..., (n, values[n-1]).
/// The origin is prepended; callers supply only the n trailing ordinates.
Polyline polyline_from_values(const std::vector<double>& values);

/// Sum of Euclidean segment lengths.
double arc_length(const Polyline& curve);

/// O(n log n) monotone-chain hull. Throws std::invalid_argument on fewer
/// than 2 distinct points. Orientation tests use the exact sign of the
/// double-precision cross product.
ConvexHull convex_hull(std::vector<Point2> points);

/// Perimeter of the hull polygon; a degenerate (collinear) hull counts as
/// twice the distance between its two extreme points.
double hull_perimeter(const ConvexHull& hull);

/// Length, hull perimeter and inconstancy 2*l/delta of the curve.
CurveMetrics inconstancy(const Polyline& curve);

/// Closed form for the two-segment curve through (0,0), (1,a1), (2,a2):
/// 2 / (1 + sqrt(a2^2+4) / (sqrt(a1^2+1) + sqrt((a2-a1)^2+1))).
double two_segment_inconstancy(double a1, double a2);

}  // namespace crofton
