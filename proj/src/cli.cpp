#include "crofton/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crofton/crofton_mc.hpp"
#include "crofton/entropy.hpp"
#include "crofton/frequencies.hpp"
#include "crofton/geometry.hpp"
#include "crofton/metrics.hpp"
#include "crofton/version.hpp"

namespace crofton::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- parsing

std::vector<double> parse_double_list(const std::string& text,
                                      const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v)) throw std::exception();
      out.push_back(v);
    } catch (...) {
      throw UsageError(std::string(what) + ": cannot parse number '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const char* what) {
  std::vector<std::size_t> out;
  for (const double v : parse_double_list(text, what)) {
    if (v < 0 || v != std::floor(v))
      throw UsageError(std::string(what) + ": expected non-negative integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::map<Symbol, Symbol> parse_coding(const std::string& spec) {
  std::map<Symbol, Symbol> coding;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() != 3 || item[1] != ':')
      throw UsageError("--coding: expected \"a:0,b:1\" style entries");
    coding[item[0]] = item[2];
  }
  if (coding.empty()) throw UsageError("--coding: empty coding");
  return coding;
}

// --------------------------------------------------------------- sources

struct SourceSpec {
  std::string csv_path;
  std::string values_text;
  std::string seq_name;
  std::string pattern;
  std::string morphism_spec;
  std::string coding_spec;
  std::string seed_letter;
  double alpha = 0.0;
  double rho = 0.0;
  double p = 0.5;
  double h = 1.0;
  std::int64_t d = 0;
  std::uint64_t seed = 12345;
  std::uint64_t n = 0;
  bool no_origin = false;
};

void add_sequence_options(CLI::App* cmd, SourceSpec& src) {
  cmd->set_help_flag("--help", "print this help message and exit");
  cmd->add_option("--seq", src.seq_name,
                  "named sequence: periodic|alternating|thue-morse|"
                  "rudin-shapiro|paperfolding|sturmian|random");
  cmd->add_option("--n", src.n, "prefix length");
  cmd->add_option("--pattern", src.pattern, "pattern for --seq periodic");
  cmd->add_option("--d", src.d, "d for the periodic pattern 0^d 1");
  cmd->add_option("--alpha", src.alpha, "Sturmian slope in (0,1)");
  cmd->add_option("--rho", src.rho, "Sturmian intercept (default 0)");
  cmd->add_option("--p", src.p, "Bernoulli parameter for --seq random");
  cmd->add_option("--h", src.h, "value of symbol 1 (default 1)");
  cmd->add_option("--seed", src.seed, "RNG seed");
  cmd->add_option("--morphism", src.morphism_spec,
                  "substitution rules, e.g. \"0:01,1:10\"");
  cmd->add_option("--seed-letter", src.seed_letter,
                  "prolongable start letter for --morphism");
  cmd->add_option("--coding", src.coding_spec,
                  "letter coding applied to the fixed point, e.g. \"a:0,b:1\"");
}

void add_curve_options(CLI::App* cmd, SourceSpec& src) {
  cmd->add_option("--csv", src.csv_path,
                  "CSV file: one value per line or index,value rows");
  cmd->add_option("--values", src.values_text, "inline comma-separated values");
  cmd->add_flag("--no-origin", src.no_origin,
                "treat CSV rows as raw x,y vertices (no origin prepended)");
  add_sequence_options(cmd, src);
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // tolerate surrounding whitespace and blank lines
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    std::stringstream ss(line.substr(begin, end - begin + 1));
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() &&
               (cell[used] == ' ' || cell[used] == '\t'))
          ++used;
        if (used != cell.size() || !std::isfinite(v)) throw std::exception();
        row.push_back(v);
      } catch (...) {
        throw IoError("malformed CSV row " + std::to_string(line_no) + " in " +
                      path + ": '" + cell + "'");
      }
    }
    if (row.empty() || row.size() > 2 ||
        (!rows.empty() && row.size() != rows.front().size()))
      throw IoError("malformed CSV row " + std::to_string(line_no) + " in " +
                    path + ": expected a consistent 1- or 2-column layout");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IoError("empty CSV file: " + path);
  return rows;
}

SymbolSequence build_sequence(const SourceSpec& src,
                              std::vector<std::string>& warnings) {
  if (src.seq_name.empty() && src.morphism_spec.empty())
    throw UsageError("need --seq NAME or --morphism SPEC");
  const std::uint64_t n = src.n;
  if (n == 0) throw UsageError("sequence sources need --n");
  SymbolSequence seq;
  if (!src.morphism_spec.empty()) {
    const Morphism m = Morphism::parse(src.morphism_spec);
    Symbol seed = 0;
    if (!src.seed_letter.empty()) {
      if (src.seed_letter.size() != 1)
        throw UsageError("--seed-letter: expected a single letter");
      seed = src.seed_letter[0];
    } else {
      for (const Symbol a : m.alphabet())
        if (m.image(a).size() >= 2 && m.image(a).front() == a) {
          seed = a;
          break;
        }
      if (seed == 0)
        throw UsageError("--morphism: no prolongable letter; give --seed-letter");
    }
    seq = fixed_point(m, seed, n);
    if (!src.coding_spec.empty())
      seq = code(seq, parse_coding(src.coding_spec));
  } else if (src.seq_name == "periodic") {
    std::string pattern = src.pattern;
    if (pattern.empty() && src.d >= 1)
      pattern = std::string(static_cast<std::size_t>(src.d), '0') + "1";
    if (pattern.empty())
      throw UsageError("--seq periodic needs --pattern or --d");
    seq = periodic(pattern, n);
  } else if (src.seq_name == "alternating") {
    seq = periodic("01", n);
  } else if (src.seq_name == "thue-morse") {
    seq = thue_morse(n);
  } else if (src.seq_name == "rudin-shapiro") {
    seq = rudin_shapiro(n);
  } else if (src.seq_name == "paperfolding") {
    seq = paperfolding(n);
  } else if (src.seq_name == "sturmian") {
    if (!(src.alpha > 0.0 && src.alpha < 1.0))
      throw UsageError("--seq sturmian needs --alpha in (0,1)");
    seq = sturmian(src.alpha, src.rho, n);
  } else if (src.seq_name == "random") {
    seq = random_binary(src.p, src.seed, n);
  } else {
    throw UsageError("unknown sequence '" + src.seq_name + "'");
  }
  const bool binary =
      seq.symbols.find_first_not_of("01") == std::string::npos;
  if (binary) {
    seq.value_map = std::map<Symbol, double>{{'0', 0.0}, {'1', src.h}};
  } else if (src.h != 1.0) {
    warnings.push_back("--h ignored: sequence is not over symbols 0 and 1");
  }
  return seq;
}

struct ResolvedInput {
  std::optional<SymbolSequence> sequence;  // set for sequence sources
  std::vector<double> values;              // set for value sources
  std::optional<Polyline> curve;
  json echo;
};

ResolvedInput resolve_input(const SourceSpec& src,
                            std::vector<std::string>& warnings) {
  const int n_sources = !src.csv_path.empty() + !src.values_text.empty() +
                        (!src.seq_name.empty() || !src.morphism_spec.empty());
  if (n_sources != 1)
    throw UsageError("give exactly one of --csv, --values, --seq/--morphism");
  if (src.no_origin && src.csv_path.empty())
    throw UsageError("--no-origin applies to --csv input only");

  ResolvedInput input;
  if (!src.values_text.empty()) {
    input.values = parse_double_list(src.values_text, "--values");
    input.curve = polyline_from_values(input.values);
    input.echo = {{"values", input.values}};
    return input;
  }
  if (!src.csv_path.empty()) {
    const auto rows = read_csv_rows(src.csv_path);
    input.echo = {{"csv", src.csv_path}};
    if (src.no_origin) {
      if (rows.front().size() != 2)
        throw IoError(src.csv_path + ": --no-origin needs x,y rows");
      std::vector<Point2> pts;
      pts.reserve(rows.size());
      for (const auto& row : rows) pts.push_back({row[0], row[1]});
      input.curve = Polyline(std::move(pts));
      input.echo["no_origin"] = true;
      return input;
    }
    input.values.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() == 2 && rows[i][0] != static_cast<double>(i))
        throw IoError("malformed CSV row " + std::to_string(i + 1) + " in " +
                      src.csv_path + ": index column must run 0,1,2,...");
      input.values.push_back(rows[i].back());
    }
    input.curve = polyline_from_values(input.values);
    return input;
  }
  input.sequence = build_sequence(src, warnings);
  input.curve = polyline_from_sequence(*input.sequence);
  input.echo = {{"seq", src.seq_name.empty() ? "morphism" : src.seq_name},
                {"n", input.sequence->size()}};
  if (!src.morphism_spec.empty()) input.echo["morphism"] = src.morphism_spec;
  return input;
}

// --------------------------------------------------------------- reports

json histogram_json(const std::map<int, std::int64_t>& hist) {
  json out = json::object();
  for (const auto& [n, count] : hist) out[std::to_string(n)] = count;
  return out;
}

json pn_json(const std::map<int, double>& pn) {
  json out = json::object();
  for (const auto& [n, p] : pn) out[std::to_string(n)] = p;
  return out;
}

json block_frequencies_json(const BlockFrequencies& freqs) {
  json out = json::object();
  for (const auto& [block, f] : freqs.freqs)
    out[std::string{block.first, block.second}] = f;
  return out;
}

void print_table(std::ostream& out, const std::string& key, const json& value,
                 int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (value.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) print_table(out, k, v, depth + 1);
    return;
  }
  if (value.is_array()) {
    out << pad << key << ":\n";
    for (const auto& row : value) {
      out << pad << " ";
      if (row.is_array()) {
        for (const auto& cell : row)
          out << " " << std::setprecision(6) << cell.get<double>();
      } else {
        out << " " << row.dump();
      }
      out << "\n";
    }
    return;
  }
  if (value.is_number_float()) {
    out << pad << key << ": " << std::setprecision(6) << value.get<double>()
        << "\n";
    return;
  }
  out << pad << key << ": " << value.dump() << "\n";
}

// ------------------------------------------------------------- commands

struct CommonFlags {
  bool json_mode = false;   // default anyway; kept as an explicit switch
  bool table_mode = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json_mode, "emit the JSON report (default)");
  cmd->add_flag("--table", flags.table_mode,
                "emit a rounded human-readable view instead of JSON");
}

json curve_metrics_json(const CurveMetrics& m) {
  return {{"length", m.length},
          {"hull_perimeter", m.hull_perimeter},
          {"inconstancy", m.inconstancy}};
}

struct BinaryView {
  SymbolSequence seq;
  double h = 1.0;
};

// Interprets resolved input as a two-valued {0,h} sequence for the finite
// binary formula; values sources must match exactly.
BinaryView as_binary(const ResolvedInput& input, double h_flag) {
  if (input.sequence) {
    if (input.sequence->symbols.find_first_not_of("01") != std::string::npos)
      throw UsageError("analyze needs a sequence over symbols 0 and 1");
    double h = h_flag;
    if (input.sequence->value_map) {
      const auto it = input.sequence->value_map->find('1');
      if (it != input.sequence->value_map->end()) h = it->second;
    }
    return {*input.sequence, h};
  }
  double h = h_flag;
  bool h_known = h_flag != 1.0;
  if (!h_known) {
    for (const double v : input.values)
      if (v != 0.0) {
        h = v;
        h_known = true;
        break;
      }
    if (!h_known) h = 1.0;  // all-zero sequence; h is immaterial
  }
  BinaryView view;
  view.h = h;
  view.seq.symbols.push_back('0');  // the prepended origin value
  for (const double v : input.values) {
    if (v == 0.0)
      view.seq.symbols.push_back('0');
    else if (v == h)
      view.seq.symbols.push_back('1');
    else
      throw UsageError("analyze: values must lie in {0, h}");
  }
  view.seq.value_map = std::map<Symbol, double>{{'0', 0.0}, {'1', h}};
  return view;
}

json run_analyze(const ResolvedInput& input, double h_flag) {
  const BinaryView view = as_binary(input, h_flag);
  const double formula = finite_binary_inconstancy(view.seq, view.h);
  const CurveMetrics geo = inconstancy(polyline_from_sequence(view.seq));
  json blocks = json::object();
  for (const auto& [block, count] : count_blocks(view.seq).counts)
    blocks[std::string{block.first, block.second}] = count;
  return {{"formula_inconstancy", formula},
          {"geometry_inconstancy", geo.inconstancy},
          {"abs_difference", std::abs(formula - geo.inconstancy)},
          {"length", geo.length},
          {"hull_perimeter", geo.hull_perimeter},
          {"h", view.h},
          {"block_counts", blocks}};
}

struct AsymptoticFlags {
  std::string checkpoints_text;
};

json run_asymptotic(const SourceSpec& src, const AsymptoticFlags& flags,
                    std::vector<std::string>& warnings) {
  if (src.seq_name.empty() && src.morphism_spec.empty())
    throw UsageError("asymptotic needs --seq or --morphism");

  // Closed form, where one is known.
  json results = json::object();
  std::optional<double> exact;
  const auto constants = named_constants();
  if (src.seq_name == "thue-morse") exact = constants.at("thue_morse");
  if (src.seq_name == "rudin-shapiro") exact = constants.at("rudin_shapiro");
  if (src.seq_name == "paperfolding") exact = constants.at("paperfolding");
  if (src.seq_name == "alternating") exact = constants.at("alternating");
  if (src.seq_name == "periodic") {
    std::int64_t d = src.d;
    if (d == 0 && !src.pattern.empty()) {
      // accept 0^d 1 patterns
      const std::string& p = src.pattern;
      if (p.back() == '1' &&
          p.find_first_not_of('0') == p.size() - 1)
        d = static_cast<std::int64_t>(p.size()) - 1;
    }
    if (d >= 1) {
      exact = periodic_inconstancy(d);
    } else {
      warnings.push_back(
          "no closed form for this period pattern; reporting the empirical "
          "trajectory only");
    }
  }
  if (src.seq_name == "sturmian") {
    if (!(src.alpha > 0.0 && src.alpha < 1.0))
      throw UsageError("--seq sturmian needs --alpha in (0,1)");
    double slope = src.alpha;
    if (slope >= 0.5) {
      slope = 1.0 - slope;
      warnings.push_back("slope > 1/2: using 1 - alpha (symbols swapped)");
    }
    exact = sturmian_inconstancy(slope);
  }
  if (src.seq_name == "random") {
    // i.i.d. Bernoulli(p) block frequencies, through the limit formula
    BlockFrequencies freqs;
    const double p = src.p, q = 1.0 - src.p;
    freqs.freqs[{'0', '0'}] = q * q;
    freqs.freqs[{'0', '1'}] = q * p;
    freqs.freqs[{'1', '0'}] = p * q;
    freqs.freqs[{'1', '1'}] = p * p;
    exact = asymptotic_inconstancy(
        freqs, {{'0', 0.0}, {'1', src.h}});
  }

  // Exact Perron block frequencies where a generating morphism is at hand.
  std::optional<Morphism> morphism;
  std::optional<std::map<Symbol, Symbol>> coding;
  if (!src.morphism_spec.empty()) {
    morphism = Morphism::parse(src.morphism_spec);
    if (!src.coding_spec.empty()) coding = parse_coding(src.coding_spec);
  } else if (src.seq_name == "thue-morse") {
    morphism = Morphism::parse("0:01,1:10");
  }
  if (morphism) {
    try {
      BlockFrequencies freqs = exact_block_frequencies(*morphism);
      if (coding) {
        BlockFrequencies coded;
        for (const auto& [block, f] : freqs.freqs)
          coded.freqs[{coding->at(block.first), coding->at(block.second)}] += f;
        freqs = coded;
      }
      results["block_frequencies"] = block_frequencies_json(freqs);
      results["frequency_source"] = "perron";
      std::map<Symbol, double> values;
      bool numeric = true;
      for (const auto& [block, f] : freqs.freqs)
        for (const Symbol s : {block.first, block.second}) {
          if (s == '1')
            values[s] = src.h;
          else if (std::isdigit(static_cast<unsigned char>(s)))
            values[s] = static_cast<double>(s - '0');
          else
            numeric = false;
        }
      if (numeric) {
        const double freq_inc = asymptotic_inconstancy(freqs, values);
        results["frequency_inconstancy"] = freq_inc;
        if (!exact) exact = freq_inc;
      } else {
        warnings.push_back(
            "letters have no numeric values; give --coding to map them before "
            "computing a frequency inconstancy");
      }
    } catch (const NotPrimitiveError&) {
      warnings.push_back(
          "incidence matrix is not primitive; falling back to empirical "
          "frequencies");
    }
  }

  // Empirical trajectory.
  std::vector<std::size_t> checkpoints;
  if (!flags.checkpoints_text.empty()) {
    checkpoints = parse_size_list(flags.checkpoints_text, "--checkpoints");
  } else {
    for (const std::size_t c : {256u, 1024u, 4096u, 16384u, 65536u})
      if (src.n == 0 || c < src.n) checkpoints.push_back(c);
    if (src.n != 0) checkpoints.push_back(static_cast<std::size_t>(src.n));
  }
  SourceSpec gen = src;
  gen.n = checkpoints.back();
  const SymbolSequence seq = build_sequence(gen, warnings);
  const auto series = convergence_series(seq, checkpoints);
  json trajectory = json::array();
  for (const auto& [n, inc] : series)
    trajectory.push_back(json::array({n, inc}));
  results["trajectory"] = trajectory;
  results["empirical_inconstancy"] = series.back().second;

  BlockFrequencies empirical = empirical_frequencies(seq);
  if (!results.contains("block_frequencies")) {
    results["block_frequencies"] = block_frequencies_json(empirical);
    results["frequency_source"] = "empirical";
  }
  if (exact) {
    results["exact_inconstancy"] = *exact;
    results["abs_deviation_at_max"] = std::abs(series.back().second - *exact);
  }
  return results;
}

json run_crofton_mc(const Polyline& curve, std::int64_t samples,
                    std::uint64_t seed) {
  const McEstimate est = estimate_crofton(curve, samples, seed);
  const CurveMetrics metrics = inconstancy(curve);
  json results;
  results["mean_hits"] = est.mean_hits;
  results["std_error"] = est.std_error;
  results["n_lines_hitting"] = est.n_lines_hitting;
  results["n_lines_sampled"] = est.n_lines_sampled;
  results["hit_histogram"] = histogram_json(est.hit_histogram);
  results["domain_measure"] = est.domain_measure;
  results["omega_measure_estimate"] =
      est.domain_measure * static_cast<double>(est.n_lines_hitting) /
      static_cast<double>(est.n_lines_sampled);
  results["closed_form_inconstancy"] = metrics.inconstancy;
  results["hull_perimeter"] = metrics.hull_perimeter;
  results["abs_error"] = std::abs(est.mean_hits - metrics.inconstancy);
  if (est.n_lines_hitting > 0) {
    results["p_n"] = pn_json(empirical_pn(est));
    if (est.std_error > 0.0)
      results["z_score"] =
          (est.mean_hits - metrics.inconstancy) / est.std_error;
  }
  return results;
}

json run_entropy(const Polyline& curve, std::optional<std::int64_t> samples,
                 std::uint64_t seed) {
  const CurveMetrics metrics = inconstancy(curve);
  const EntropyReport report = max_entropy(metrics);
  json results = curve_metrics_json(metrics);
  results["modified_entropy"] = report.modified_entropy;
  results["h_max"] = report.h_max;
  const bool straight = !std::isfinite(report.beta);
  results["straight_line"] = straight;
  results["beta"] = straight ? json(nullptr) : json(report.beta);
  if (samples) {
    const McEstimate est = estimate_crofton(curve, *samples, seed);
    const auto pn = empirical_pn(est);
    results["empirical_entropy"] = empirical_entropy(pn);
    results["p_n"] = pn_json(pn);
    results["mc_std_error"] = est.std_error;
  }
  return results;
}

int emit(std::ostream& out, const std::string& command, const json& request,
         const json& results, const std::vector<std::string>& warnings,
         std::optional<std::uint64_t> seed, bool table,
         Clock::time_point start) {
  json report;
  report["schema"] = kReportSchema;
  report["command"] = command;
  report["request"] = request;
  report["results"] = results;
  report["warnings"] = warnings;
  report["metadata"] = {
      {"version", kVersion},
      {"seed", seed ? json(*seed) : json(nullptr)},
      {"timing_ms",
       std::chrono::duration<double, std::milli>(Clock::now() - start).count()}};
  if (table) {
    for (const auto& [k, v] : report["results"].items())
      print_table(out, k, v, 0);
    for (const auto& w : report["warnings"])
      out << "warning: " << w.get<std::string>() << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

std::vector<std::pair<std::size_t, double>> convergence_series(
    const SymbolSequence& seq, const std::vector<std::size_t>& checkpoints) {
  if (checkpoints.empty())
    throw std::invalid_argument("convergence_series: no checkpoints");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("convergence_series: checkpoints must increase");
  if (checkpoints.front() < 2 || checkpoints.back() > seq.size())
    throw std::invalid_argument("convergence_series: checkpoints out of range");
  std::vector<std::pair<std::size_t, double>> series;
  series.reserve(checkpoints.size());
  for (const std::size_t n : checkpoints) {
    SymbolSequence prefix{seq.symbols.substr(0, n), seq.value_map};
    series.emplace_back(n,
                        inconstancy(polyline_from_sequence(prefix)).inconstancy);
  }
  return series;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  const auto start = Clock::now();
  CLI::App app{"inconstancy of discrete curves and symbolic sequences"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  SourceSpec src;
  CommonFlags flags;
  AsymptoticFlags asym;
  std::string candidates_text;
  std::int64_t samples = 100000;
  bool samples_given = false;

  auto* c_inc = app.add_subcommand("inconstancy",
                                   "length, hull perimeter and inconstancy");
  add_curve_options(c_inc, src);
  add_common_flags(c_inc, flags);

  auto* c_cmp = app.add_subcommand(
      "compare", "inconstancy next to the regression-based statistics");
  add_curve_options(c_cmp, src);
  add_common_flags(c_cmp, flags);

  auto* c_ana = app.add_subcommand(
      "analyze", "finite binary formula cross-checked against geometry");
  add_curve_options(c_ana, src);
  add_common_flags(c_ana, flags);

  auto* c_asy = app.add_subcommand(
      "asymptotic", "closed-form limits, Perron frequencies and trajectory");
  add_sequence_options(c_asy, src);
  c_asy->add_option("--checkpoints", asym.checkpoints_text,
                    "prefix lengths for the trajectory");
  add_common_flags(c_asy, flags);

  auto* c_mc = app.add_subcommand("crofton-mc",
                                  "Monte Carlo random-line verification");
  add_curve_options(c_mc, src);
  c_mc->add_option("--samples", samples, "number of sampled lines")
      ->check(CLI::PositiveNumber);
  add_common_flags(c_mc, flags);

  auto* c_ent = app.add_subcommand("entropy",
                                   "curve entropy, h_max and temperature");
  add_curve_options(c_ent, src);
  auto* ent_samples_opt =
      c_ent->add_option("--samples", samples, "add an MC empirical entropy")
          ->check(CLI::PositiveNumber);
  add_common_flags(c_ent, flags);

  auto* c_gen = app.add_subcommand("generate", "emit a sequence prefix");
  add_sequence_options(c_gen, src);
  add_common_flags(c_gen, flags);

  auto* c_pre = app.add_subcommand(
      "predict", "candidate minimizing the inconstancy change");
  add_curve_options(c_pre, src);
  c_pre->add_option("--candidates", candidates_text,
                    "comma-separated candidate next values")
      ->required();
  add_common_flags(c_pre, flags);

  try {
    // CLI11 consumes the argument vector back to front.
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  samples_given = ent_samples_opt->count() > 0;

  std::vector<std::string> warnings;
  try {
    if (c_gen->parsed()) {
      const SymbolSequence seq = build_sequence(src, warnings);
      json results = {{"sequence", seq.symbols},
                      {"length", seq.symbols.size()}};
      if (seq.value_map) {
        json vm = json::object();
        for (const auto& [s, v] : *seq.value_map) vm[std::string(1, s)] = v;
        results["value_map"] = vm;
      }
      const json request = {{"seq", src.seq_name.empty() ? "morphism"
                                                         : src.seq_name},
                            {"n", src.n}};
      return emit(out, "generate", request, results, warnings,
                  src.seq_name == "random" ? std::optional(src.seed)
                                           : std::nullopt,
                  flags.table_mode, start);
    }

    if (c_asy->parsed()) {
      const json results = run_asymptotic(src, asym, warnings);
      const json request = {{"seq", src.seq_name.empty() ? "morphism"
                                                         : src.seq_name}};
      return emit(out, "asymptotic", request, results, warnings,
                  src.seq_name == "random" ? std::optional(src.seed)
                                           : std::nullopt,
                  flags.table_mode, start);
    }

    ResolvedInput input = resolve_input(src, warnings);
    const Polyline& curve = *input.curve;

    if (c_inc->parsed()) {
      return emit(out, "inconstancy", input.echo,
                  curve_metrics_json(inconstancy(curve)), warnings,
                  std::nullopt, flags.table_mode, start);
    }
    if (c_cmp->parsed()) {
      const auto& pts = curve.vertices();
      const double m = mse(pts);
      const json results = {{"mse", m},
                            {"rmse", std::sqrt(m)},
                            {"total_variation", total_variation(pts)},
                            {"max_distance", max_distance(pts)},
                            {"inconstancy", inconstancy(curve).inconstancy}};
      return emit(out, "compare", input.echo, results, warnings, std::nullopt,
                  flags.table_mode, start);
    }
    if (c_ana->parsed()) {
      return emit(out, "analyze", input.echo, run_analyze(input, src.h),
                  warnings, std::nullopt, flags.table_mode, start);
    }
    if (c_mc->parsed()) {
      return emit(out, "crofton-mc", input.echo,
                  run_crofton_mc(curve, samples, src.seed), warnings, src.seed,
                  flags.table_mode, start);
    }
    if (c_ent->parsed()) {
      return emit(out, "entropy", input.echo,
                  run_entropy(curve,
                              samples_given ? std::optional(samples)
                                            : std::nullopt,
                              src.seed),
                  warnings,
                  samples_given ? std::optional(src.seed) : std::nullopt,
                  flags.table_mode, start);
    }
    if (c_pre->parsed()) {
      std::vector<double> history = input.values;
      if (input.sequence) {
        // A sequence supplies its own start; predict_next prepends the
        // origin, so the first value must already be 0.
        const std::vector<double> vals = input.sequence->values();
        if (vals.empty() || vals.front() != 0.0)
          throw UsageError("predict with a sequence source needs u_0 = 0");
        history.assign(vals.begin() + 1, vals.end());
      }
      if (history.empty())
        throw UsageError("predict needs a value source (--values, --csv or --seq)");
      const auto candidates = parse_double_list(candidates_text, "--candidates");
      const double base = inconstancy(curve).inconstancy;
      const double choice = predict_next(history, candidates);
      json per_candidate = json::array();
      std::vector<double> extended = history;
      extended.push_back(0.0);
      for (const double c : candidates) {
        extended.back() = c;
        const double inc =
            inconstancy(polyline_from_values(extended)).inconstancy;
        per_candidate.push_back({{"value", c},
                                 {"inconstancy", inc},
                                 {"abs_change", std::abs(inc - base)}});
      }
      const json results = {{"prediction", choice},
                            {"base_inconstancy", base},
                            {"candidates", per_candidate}};
      return emit(out, "predict", input.echo, results, warnings, std::nullopt,
                  flags.table_mode, start);
    }
    err << "unhandled subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace crofton::cli
