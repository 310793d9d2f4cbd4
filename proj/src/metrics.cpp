#include "crofton/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace crofton {

namespace {

void check_points(const std::vector<Point2>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("regression: need at least 3 points");
  for (const Point2& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("regression: non-finite point");
}

}  // namespace

RegressionFit regression(const std::vector<Point2>& points) {
  check_points(points);
  const double n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const Point2& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const Point2& p : points) {
    sxx += (p.x - mean_x) * (p.x - mean_x);
    sxy += (p.x - mean_x) * (p.y - mean_y);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("regression: all abscissae coincide");
  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x, static_cast<int>(points.size())};
}

double mse(const std::vector<Point2>& points) {
  const RegressionFit fit = regression(points);
  double ss = 0.0;
  for (const Point2& p : points) {
    const double r = p.y - fit.slope * p.x - fit.intercept;
    ss += r * r;
  }
  return ss / (static_cast<double>(points.size()) - 2.0);
}

double rmse(const std::vector<Point2>& points) { return std::sqrt(mse(points)); }

double total_variation(const std::vector<Point2>& points) {
  if (points.empty())
    throw std::invalid_argument("total_variation: empty input");
  double mean_y = 0.0;
  for (const Point2& p : points) mean_y += p.y;
  mean_y /= static_cast<double>(points.size());
  double ss = 0.0;
  for (const Point2& p : points) ss += (p.y - mean_y) * (p.y - mean_y);
  return ss / static_cast<double>(points.size());
}

double max_distance(const std::vector<Point2>& points) {
  const RegressionFit fit = regression(points);
  double worst = 0.0;
  for (const Point2& p : points)
    worst = std::max(worst, std::abs(p.y - fit.slope * p.x - fit.intercept));
  return worst;
}

FluctuationReport fluctuation_report(const std::vector<double>& values) {
  if (values.size() < 2)
    throw std::invalid_argument("fluctuation_report: need at least 2 values");
  const Polyline curve = polyline_from_values(values);
  const auto& pts = curve.vertices();
  const double m = mse(pts);
  return {m, std::sqrt(m), total_variation(pts), max_distance(pts),
          inconstancy(curve).inconstancy};
}

double predict_next(const std::vector<double>& values,
                    const std::vector<double>& candidates) {
  if (values.size() < 2)
    throw std::invalid_argument("predict_next: need at least 2 values");
  if (candidates.empty())
    throw std::invalid_argument("predict_next: no candidates");
  const double base = inconstancy(polyline_from_values(values)).inconstancy;
  std::vector<double> extended = values;
  extended.push_back(0.0);
  double best_candidate = 0.0;
  double best_diff = std::numeric_limits<double>::infinity();
  for (const double c : candidates) {
    extended.back() = c;
    const double diff =
        std::abs(inconstancy(polyline_from_values(extended)).inconstancy - base);
    if (diff < best_diff || (diff == best_diff && c < best_candidate)) {
      best_diff = diff;
      best_candidate = c;
    }
  }
  return best_candidate;
}

}  // namespace crofton
