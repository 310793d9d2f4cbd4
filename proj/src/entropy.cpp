#include "crofton/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crofton {

double modified_entropy(const CurveMetrics& metrics) {
  return std::log(metrics.inconstancy);
}

EntropyReport max_entropy(const CurveMetrics& metrics) {
  EntropyReport report;
  report.modified_entropy = modified_entropy(metrics);
  const double excess = 2.0 * metrics.length - metrics.hull_perimeter;
  if (excess <= 0.0) {
    // Straight curve: every secant meets it once, p_1 = 1 is forced.
    report.beta = std::numeric_limits<double>::infinity();
    report.h_max = 0.0;
    return report;
  }
  report.beta = std::log(2.0 * metrics.length / excess);
  report.h_max =
      report.modified_entropy + report.beta / std::expm1(report.beta);
  return report;
}

double empirical_entropy(const std::map<int, double>& pn) {
  double total = 0.0;
  for (const auto& [n, p] : pn) {
    if (p < 0.0)
      throw std::invalid_argument("empirical_entropy: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("empirical_entropy: probabilities must sum to 1");
  double h = 0.0;
  for (const auto& [n, p] : pn)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

}  // namespace crofton
