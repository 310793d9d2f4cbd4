#pragma once

#include <vector>

#include "crofton/geometry.hpp"

namespace crofton {

/// Least-squares line y = slope*x + intercept.
struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  int n_points = 0;
};

struct FluctuationReport {
  double mse = 0.0;
  double rmse = 0.0;
  double total_variation = 0.0;
  double max_distance = 0.0;
  double inconstancy = 1.0;
};

/// Ordinary least squares over n >= 3 points; throws std::invalid_argument
/// on fewer points or when all abscissae coincide.
RegressionFit regression(const std::vector<Point2>& points);

/// Residual variance: sum of squared residuals about the regression line,
/// divided by n - 2.
double mse(const std::vector<Point2>& points);
double rmse(const std::vector<Point2>& points);

/// Mean of (y_i - mean(y))^2.
double total_variation(const std::vector<Point2>& points);

/// Maximal absolute residual about the regression line.
double max_distance(const std::vector<Point2>& points);

/// All five fluctuation statistics of the curve through (0,0), (1, v_1), ...
/// Regression statistics run over all n+1 vertices, origin included.
FluctuationReport fluctuation_report(const std::vector<double>& values);

/// The candidate c minimizing |I(values + [c]) - I(values)|; ties broken by
/// the smallest candidate value.
double predict_next(const std::vector<double>& values,
                    const std::vector<double>& candidates);

}  // namespace crofton
