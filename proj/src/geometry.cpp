#include "crofton/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace crofton {

namespace {

bool finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double dist(const Point2& a, const Point2& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

// Twice the signed area of (o, a, b); > 0 for a counter-clockwise turn.
double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Polyline::Polyline(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 2)
    throw std::invalid_argument("Polyline: need at least 2 vertices");
  for (const Point2& v : verts_)
    if (!finite(v)) throw std::invalid_argument("Polyline: non-finite vertex");
  for (std::size_t i = 1; i < verts_.size(); ++i)
    if (verts_[i] == verts_[i - 1])
      throw std::invalid_argument("Polyline: consecutive vertices coincide");
}

Polyline polyline_from_values(const std::vector<double>& values) {
  if (values.empty())
    throw std::invalid_argument("polyline_from_values: empty input");
  std::vector<Point2> verts;
  verts.reserve(values.size() + 1);
  verts.push_back({0.0, 0.0});
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k]))
      throw std::invalid_argument("polyline_from_values: non-finite value");
    verts.push_back({static_cast<double>(k + 1), values[k]});
  }
  return Polyline(std::move(verts));
}

double arc_length(const Polyline& curve) {
  const auto& v = curve.vertices();
  double total = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) total += dist(v[i - 1], v[i]);
  return total;
}

ConvexHull convex_hull(std::vector<Point2> points) {
  for (const Point2& p : points)
    if (!finite(p)) throw std::invalid_argument("convex_hull: non-finite point");
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 2)
    throw std::invalid_argument("convex_hull: need at least 2 distinct points");

  // Andrew monotone chain; popping on cross <= 0 drops collinear boundary
  // points, so the result has strict turns only.
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);  // last point repeats the first

  if (hull.size() == 2)
    return {{points.front(), points.back()}, /*degenerate=*/true};
  return {std::move(hull), /*degenerate=*/false};
}

double hull_perimeter(const ConvexHull& hull) {
  const auto& h = hull.hull_vertices;
  if (hull.degenerate) return 2.0 * dist(h[0], h[1]);
  double per = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    per += dist(h[i], h[(i + 1) % h.size()]);
  return per;
}

CurveMetrics inconstancy(const Polyline& curve) {
  const double len = arc_length(curve);
  const double delta = hull_perimeter(convex_hull(curve.vertices()));
  return {len, delta, 2.0 * len / delta};
}

double two_segment_inconstancy(double a1, double a2) {
  if (!std::isfinite(a1) || !std::isfinite(a2))
    throw std::invalid_argument("two_segment_inconstancy: non-finite value");
  // sqrt instead of hypot keeps I(a/2, a) == 1 exact: the chord term
  // sqrt(a^2 + 4) then equals 2*sqrt((a/2)^2 + 1) bit-for-bit.
  const double leg1 = std::sqrt(a1 * a1 + 1.0);
  const double leg2 = std::sqrt((a2 - a1) * (a2 - a1) + 1.0);
  const double chord = std::sqrt(a2 * a2 + 4.0);
  return 2.0 / (1.0 + chord / (leg1 + leg2));
}

}  // namespace crofton
