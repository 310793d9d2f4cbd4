#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "crofton/crofton_mc.hpp"
#include "crofton/entropy.hpp"
#include "crofton/frequencies.hpp"
#include "crofton/geometry.hpp"
#include "crofton/metrics.hpp"
#include "crofton/sequences.hpp"
#include "crofton/version.hpp"

namespace py = pybind11;
using namespace crofton;

namespace {

Polyline curve_from_xy(const std::vector<std::pair<double, double>>& points) {
  std::vector<Point2> verts;
  verts.reserve(points.size());
  for (const auto& [x, y] : points) verts.push_back({x, y});
  return Polyline(std::move(verts));
}

SymbolSequence sequence_from(const std::string& symbols, double h) {
  SymbolSequence seq{symbols, std::nullopt};
  if (symbols.find_first_not_of("01") == std::string::npos)
    seq.value_map = std::map<Symbol, double>{{'0', 0.0}, {'1', h}};
  return seq;
}

std::map<std::string, double> freqs_to_dict(const BlockFrequencies& freqs) {
  std::map<std::string, double> out;
  for (const auto& [block, f] : freqs.freqs)
    out[std::string{block.first, block.second}] = f;
  return out;
}

BlockFrequencies freqs_from_dict(const std::map<std::string, double>& dict) {
  BlockFrequencies freqs;
  for (const auto& [block, f] : dict) {
    if (block.size() != 2)
      throw std::invalid_argument("block keys must be two symbols");
    freqs.freqs[{block[0], block[1]}] = f;
  }
  return freqs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "inconstancy of discrete curves and symbolic sequences";
  m.attr("__version__") = kVersion;

  py::class_<CurveMetrics>(m, "CurveMetrics")
      .def_readonly("length", &CurveMetrics::length)
      .def_readonly("hull_perimeter", &CurveMetrics::hull_perimeter)
      .def_readonly("inconstancy", &CurveMetrics::inconstancy)
      .def("__repr__", [](const CurveMetrics& c) {
        return "CurveMetrics(length=" + std::to_string(c.length) +
               ", hull_perimeter=" + std::to_string(c.hull_perimeter) +
               ", inconstancy=" + std::to_string(c.inconstancy) + ")";
      });

  py::class_<FluctuationReport>(m, "FluctuationReport")
      .def_readonly("mse", &FluctuationReport::mse)
      .def_readonly("rmse", &FluctuationReport::rmse)
      .def_readonly("total_variation", &FluctuationReport::total_variation)
      .def_readonly("max_distance", &FluctuationReport::max_distance)
      .def_readonly("inconstancy", &FluctuationReport::inconstancy);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("mean_hits", &McEstimate::mean_hits)
      .def_readonly("std_error", &McEstimate::std_error)
      .def_readonly("n_lines_hitting", &McEstimate::n_lines_hitting)
      .def_readonly("n_lines_sampled", &McEstimate::n_lines_sampled)
      .def_readonly("hit_histogram", &McEstimate::hit_histogram)
      .def_readonly("domain_measure", &McEstimate::domain_measure);

  py::class_<EntropyReport>(m, "EntropyReport")
      .def_readonly("modified_entropy", &EntropyReport::modified_entropy)
      .def_readonly("h_max", &EntropyReport::h_max)
      .def_readonly("beta", &EntropyReport::beta)
      .def_readonly("empirical_entropy", &EntropyReport::empirical_entropy);

  // geometry -----------------------------------------------------------
  m.def(
      "inconstancy",
      [](const std::vector<double>& values) {
        return inconstancy(polyline_from_values(values));
      },
      py::arg("values"),
      "Metrics of the curve through (0,0), (1, values[0]), ...");
  m.def(
      "inconstancy_xy",
      [](const std::vector<std::pair<double, double>>& points) {
        return inconstancy(curve_from_xy(points));
      },
      py::arg("points"), "Metrics of the curve through the given vertices.");
  m.def("two_segment_inconstancy", &two_segment_inconstancy, py::arg("a1"),
        py::arg("a2"));
  m.def(
      "convex_hull",
      [](const std::vector<std::pair<double, double>>& points) {
        std::vector<Point2> pts;
        pts.reserve(points.size());
        for (const auto& [x, y] : points) pts.push_back({x, y});
        const ConvexHull hull = convex_hull(std::move(pts));
        std::vector<std::pair<double, double>> verts;
        for (const Point2& p : hull.hull_vertices) verts.emplace_back(p.x, p.y);
        return py::make_tuple(verts, hull.degenerate);
      },
      py::arg("points"),
      "Returns (hull_vertices, degenerate); counter-clockwise order.");

  // metrics ------------------------------------------------------------
  m.def(
      "fluctuation_report",
      [](const std::vector<double>& values) {
        return fluctuation_report(values);
      },
      py::arg("values"));
  m.def("predict_next", &predict_next, py::arg("values"), py::arg("candidates"));

  // sequences ----------------------------------------------------------
  m.def(
      "periodic",
      [](const std::string& pattern, std::size_t n) {
        return periodic(pattern, n).symbols;
      },
      py::arg("pattern"), py::arg("n"));
  m.def(
      "thue_morse", [](std::size_t n) { return thue_morse(n).symbols; },
      py::arg("n"));
  m.def(
      "rudin_shapiro", [](std::size_t n) { return rudin_shapiro(n).symbols; },
      py::arg("n"));
  m.def(
      "paperfolding", [](std::size_t n) { return paperfolding(n).symbols; },
      py::arg("n"));
  m.def(
      "sturmian",
      [](double alpha, double rho, std::size_t n) {
        return sturmian(alpha, rho, n).symbols;
      },
      py::arg("alpha"), py::arg("rho"), py::arg("n"));
  m.def(
      "fixed_point",
      [](const std::string& rules, const std::string& seed, std::size_t n) {
        if (seed.size() != 1)
          throw std::invalid_argument("seed must be a single letter");
        return fixed_point(Morphism::parse(rules), seed[0], n).symbols;
      },
      py::arg("rules"), py::arg("seed"), py::arg("n"),
      "Fixed point of a substitution given as \"0:01,1:10\".");
  m.def(
      "code",
      [](const std::string& symbols, const std::map<std::string, std::string>& coding) {
        std::map<Symbol, Symbol> c;
        for (const auto& [from, to] : coding) {
          if (from.size() != 1 || to.size() != 1)
            throw std::invalid_argument("coding entries must be single letters");
          c[from[0]] = to[0];
        }
        return code(SymbolSequence{symbols, std::nullopt}, c).symbols;
      },
      py::arg("symbols"), py::arg("coding"));
  m.def(
      "random_binary",
      [](double p, std::uint64_t seed, std::size_t n) {
        return random_binary(p, seed, n).symbols;
      },
      py::arg("p"), py::arg("seed"), py::arg("n"));
  m.def(
      "sequence_inconstancy",
      [](const std::string& symbols, double h) {
        return inconstancy(polyline_from_sequence(sequence_from(symbols, h)));
      },
      py::arg("symbols"), py::arg("h") = 1.0,
      "Metrics of the curve (k, u_k) of a symbol string.");

  // frequencies ----------------------------------------------------------
  m.def(
      "empirical_frequencies",
      [](const std::string& symbols) {
        return freqs_to_dict(
            empirical_frequencies(SymbolSequence{symbols, std::nullopt}));
      },
      py::arg("symbols"));
  m.def(
      "finite_binary_inconstancy",
      [](const std::string& symbols, double h) {
        return finite_binary_inconstancy(sequence_from(symbols, h), h);
      },
      py::arg("symbols"), py::arg("h") = 1.0);
  m.def(
      "asymptotic_inconstancy",
      [](const std::map<std::string, double>& freqs,
         const std::map<std::string, double>& values) {
        std::map<Symbol, double> vals;
        for (const auto& [s, v] : values) {
          if (s.size() != 1)
            throw std::invalid_argument("value keys must be single symbols");
          vals[s[0]] = v;
        }
        return asymptotic_inconstancy(freqs_from_dict(freqs), vals);
      },
      py::arg("freqs"), py::arg("values"));
  m.def(
      "pair_morphism",
      [](const std::string& rules) {
        const PairMorphism pm = pair_morphism(Morphism::parse(rules));
        std::map<std::string, std::string> images, blocks;
        for (const Symbol a : pm.morphism.alphabet()) {
          images[std::string(1, a)] = pm.morphism.image(a);
          const BlockKey b = pm.blocks.at(a);
          blocks[std::string(1, a)] = std::string{b.first, b.second};
        }
        return py::make_tuple(images, blocks, std::string(1, pm.start));
      },
      py::arg("rules"),
      "Returns (images, letter->block map, start letter) of the induced "
      "morphism on length-2 blocks.");
  m.def(
      "perron_frequencies",
      [](const std::string& rules) {
        std::map<std::string, double> out;
        for (const auto& [s, f] : perron_frequencies(Morphism::parse(rules)))
          out[std::string(1, s)] = f;
        return out;
      },
      py::arg("rules"));
  m.def(
      "exact_block_frequencies",
      [](const std::string& rules) {
        return freqs_to_dict(exact_block_frequencies(Morphism::parse(rules)));
      },
      py::arg("rules"));
  m.def("periodic_inconstancy", &periodic_inconstancy, py::arg("d"));
  m.def("sturmian_inconstancy", &sturmian_inconstancy, py::arg("alpha"));
  m.def("named_constants", &named_constants);

  // Monte Carlo ----------------------------------------------------------
  m.def(
      "estimate_crofton",
      [](const std::vector<double>& values, std::int64_t n_samples,
         std::uint64_t seed) {
        return estimate_crofton(polyline_from_values(values), n_samples, seed);
      },
      py::arg("values"), py::arg("n_samples"), py::arg("seed"));
  m.def(
      "estimate_crofton_xy",
      [](const std::vector<std::pair<double, double>>& points,
         std::int64_t n_samples, std::uint64_t seed) {
        return estimate_crofton(curve_from_xy(points), n_samples, seed);
      },
      py::arg("points"), py::arg("n_samples"), py::arg("seed"));
  m.def(
      "intersect_count",
      [](double rho, double theta,
         const std::vector<std::pair<double, double>>& points) {
        return intersect_count(LineParam{rho, theta}, curve_from_xy(points));
      },
      py::arg("rho"), py::arg("theta"), py::arg("points"));
  m.def("empirical_pn", &empirical_pn, py::arg("estimate"));

  // entropy --------------------------------------------------------------
  m.def(
      "max_entropy",
      [](const std::vector<double>& values) {
        return max_entropy(inconstancy(polyline_from_values(values)));
      },
      py::arg("values"));
  m.def("empirical_entropy", &empirical_entropy, py::arg("pn"));
}
