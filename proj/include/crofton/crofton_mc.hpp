#pragma once

#include <cstdint>
#include <map>

#include "crofton/geometry.hpp"

namespace crofton {

/// Line in Hesse normal form: { (x,y) : x*cos(theta) + y*sin(theta) = rho },
/// theta in [0, pi), rho any real.
struct LineParam {
  double rho = 0.0;
  double theta = 0.0;
};

/// Result of a random-line experiment. `mean_hits` and `std_error` are
/// conditioned on the lines that hit the curve; `hit_histogram[n]` counts
/// hitting lines with exactly n intersection points. `domain_measure` is the
/// (rho,theta) measure of the sampling region, so
/// domain_measure * n_lines_hitting / n_lines_sampled estimates mu(Omega).
struct McEstimate {
  double mean_hits = 0.0;
  double std_error = 0.0;
  std::int64_t n_lines_hitting = 0;
  std::int64_t n_lines_sampled = 0;
  std::map<int, std::int64_t> hit_histogram;
  double domain_measure = 0.0;
};

/// Number of intersection points between the line and the curve. A point
/// shared by two segments counts once; a segment lying exactly on the line
/// counts as one intersection.
int intersect_count(const LineParam& line, const Polyline& curve);

/// Monte Carlo estimate of the mean intersection count over random lines
/// meeting the curve. Lines are drawn uniformly in (rho, theta) from a disc
/// bound around the curve and rejected when they miss, so accepted lines are
/// uniform on Omega(curve). Deterministic for a fixed seed, independent of
/// chunk scheduling.
McEstimate estimate_crofton(const Polyline& curve, std::int64_t n_samples,
                            std::uint64_t seed);

/// Normalized hit histogram p_n = hist[n] / n_lines_hitting.
/// Throws std::invalid_argument when no line hit.
std::map<int, double> empirical_pn(const McEstimate& estimate);

}  // namespace crofton
