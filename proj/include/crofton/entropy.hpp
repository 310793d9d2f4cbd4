#pragma once

#include <map>
#include <optional>

#include "crofton/geometry.hpp"

namespace crofton {

/// Entropy quantities of a curve. `beta` is the inverse temperature
/// log(2l/(2l - delta)); the straight-line boundary I = 1 is reported as
/// beta = +inf with h_max = 0 (the analytic limit).
struct EntropyReport {
  double modified_entropy = 0.0;  // log I
  double h_max = 0.0;
  double beta = 0.0;
  std::optional<double> empirical_entropy;
};

/// log of the inconstancy.
double modified_entropy(const CurveMetrics& metrics);

/// h_max = log I + beta/(e^beta - 1) with beta = log(2l/(2l - delta)).
EntropyReport max_entropy(const CurveMetrics& metrics);

/// Shannon entropy (nats) of the intersection-count distribution; zero-mass
/// bins contribute 0. Throws std::invalid_argument unless the masses sum to
/// 1 within 1e-9.
double empirical_entropy(const std::map<int, double>& pn);

}  // namespace crofton
