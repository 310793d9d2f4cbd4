#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "crofton/crofton_mc.hpp"
#include "crofton/entropy.hpp"
#include "support.hpp"

using namespace crofton;
using test_support::random_polyline;

TEST_SUITE_BEGIN("entropy");

TEST_CASE("modified entropy is the log of the inconstancy") {
  CHECK(modified_entropy({1.0, 2.0, 1.0}) == 0.0);
  CHECK(modified_entropy({1.0, std::numbers::sqrt2, std::numbers::sqrt2}) ==
        doctest::Approx(std::log(2.0) / 2).epsilon(1e-15));
  const CurveMetrics tent = inconstancy(polyline_from_values({1, 0}));
  CHECK(modified_entropy(tent) ==
        doctest::Approx(std::log(tent.inconstancy)).epsilon(1e-15));
}

TEST_CASE("max_entropy closed form and the straight-line limit") {
  const EntropyReport segment =
      max_entropy(inconstancy(Polyline({{0, 0}, {2, 1}})));
  CHECK(segment.h_max == 0.0);
  CHECK(segment.beta == std::numeric_limits<double>::infinity());
  CHECK(segment.modified_entropy == 0.0);

  // closed convex curve: l = delta, I = 2, beta = log 2, h_max = 2 log 2
  const EntropyReport closed = max_entropy({1.0, 1.0, 2.0});
  CHECK(closed.beta == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(closed.h_max == doctest::Approx(2 * std::log(2.0)).epsilon(1e-15));

  const EntropyReport tent =
      max_entropy(inconstancy(polyline_from_values({1, 0})));
  CHECK(tent.beta > 0.0);
  CHECK(std::isfinite(tent.beta));
  CHECK(tent.h_max > tent.modified_entropy);
}

TEST_CASE("empirical_entropy of simple distributions") {
  CHECK(empirical_entropy({{1, 1.0}}) == 0.0);
  CHECK(empirical_entropy({{1, 0.5}, {2, 0.5}}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(empirical_entropy({{1, 1.0}, {2, 0.0}}) == 0.0);
  CHECK_THROWS_AS(empirical_entropy({{1, 0.7}}), std::invalid_argument);
  CHECK_THROWS_AS(empirical_entropy({{1, 1.5}, {2, -0.5}}),
                  std::invalid_argument);
}

TEST_CASE("strict gap between log I and h_max for bent curves") {
  std::mt19937_64 rng(521);
  for (int i = 0; i < 20; ++i) {
    const EntropyReport report = max_entropy(inconstancy(random_polyline(rng)));
    CHECK(report.modified_entropy > 0.0);
    CHECK(report.modified_entropy < report.h_max);
  }
}

TEST_CASE("beta decreases as curves get more inconstant") {
  double prev = std::numeric_limits<double>::infinity();
  for (double inc = 1.05; inc <= 2.0; inc += 0.05) {
    // synthetic metrics with unit length and delta = 2/I
    const EntropyReport report = max_entropy({1.0, 2.0 / inc, inc});
    CHECK(report.beta < prev);
    prev = report.beta;
  }
}

TEST_CASE("MC entropy stays below the maximal entropy") {
  std::mt19937_64 rng(607);
  for (int trial = 0; trial < 5; ++trial) {
    const Polyline curve = random_polyline(rng);
    const EntropyReport bound = max_entropy(inconstancy(curve));
    const McEstimate est = estimate_crofton(curve, 100000, 9000 + trial);
    const double h = empirical_entropy(empirical_pn(est));
    CHECK(h <= bound.h_max + 3 * est.std_error);
  }
}

TEST_SUITE_END();
