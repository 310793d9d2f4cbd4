#include "crofton/frequencies.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

namespace crofton {

namespace {

const double kSqrt2 = std::numbers::sqrt2;

void require_binary(const SymbolSequence& seq) {
  for (const Symbol s : seq.symbols)
    if (s != '0' && s != '1')
      throw std::invalid_argument("expected a sequence over symbols 0 and 1");
}

}  // namespace

BlockCounts count_blocks(const SymbolSequence& seq) {
  if (seq.symbols.size() < 2)
    throw std::invalid_argument("count_blocks: need length >= 2");
  BlockCounts out;
  for (std::size_t i = 0; i + 1 < seq.symbols.size(); ++i)
    ++out.counts[{seq.symbols[i], seq.symbols[i + 1]}];
  out.total = static_cast<std::int64_t>(seq.symbols.size()) - 1;
  return out;
}

BlockFrequencies empirical_frequencies(const SymbolSequence& seq) {
  const BlockCounts counts = count_blocks(seq);
  BlockFrequencies out;
  for (const auto& [block, count] : counts.counts)
    out.freqs[block] =
        static_cast<double>(count) / static_cast<double>(counts.total);
  return out;
}

double finite_binary_inconstancy(const SymbolSequence& seq, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_binary_inconstancy: h <= 0");
  require_binary(seq);
  const std::string& u = seq.symbols;
  if (u.size() < 2)
    throw std::invalid_argument("finite_binary_inconstancy: need length >= 2");
  if (u.front() != '0')
    throw std::invalid_argument("finite_binary_inconstancy: u_0 must be 0");
  if (u.find('1') == std::string::npos) return 1.0;  // flat curve

  const std::size_t last = u.size() - 1;  // the index N
  const double n = static_cast<double>(last);
  std::size_t alpha = 0;
  while (u[alpha] == '0') ++alpha;  // length of the initial 0-run
  std::size_t beta = 0;
  while (u[last - beta] == '0') ++beta;  // length of the final 0-run

  std::int64_t n_flat = 0, n_jump = 0;
  for (std::size_t i = 0; i < last; ++i)
    (u[i] == u[i + 1] ? n_flat : n_jump)++;
  const double length =
      static_cast<double>(n_flat) +
      std::sqrt(1.0 + h * h) * static_cast<double>(n_jump);

  double delta;
  if (beta > 0) {
    const double a = static_cast<double>(alpha), b = static_cast<double>(beta);
    delta = std::sqrt(h * h + a * a) + (n - a - b) + std::sqrt(h * h + b * b) + n;
  } else {
    const double a = static_cast<double>(alpha);
    const double g = static_cast<double>(u.rfind('0'));  // largest zero index
    delta = std::sqrt(h * h + a * a) + (n - a) +
            std::sqrt(h * h + (n - g) * (n - g)) + g;
  }
  return 2.0 * length / delta;
}

double asymptotic_inconstancy(const BlockFrequencies& freqs,
                              const std::map<Symbol, double>& values) {
  double total = 0.0;
  for (const auto& [block, f] : freqs.freqs) {
    if (f < -1e-12) throw std::invalid_argument("asymptotic_inconstancy: negative frequency");
    total += f;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("asymptotic_inconstancy: frequencies must sum to 1");
  std::set<double> seen;
  for (const auto& [symbol, value] : values)
    if (!seen.insert(value).second)
      throw std::invalid_argument("asymptotic_inconstancy: value map not injective");

  double inc = 1.0;
  for (const auto& [block, f] : freqs.freqs) {
    const auto a = values.find(block.first), b = values.find(block.second);
    if (a == values.end() || b == values.end())
      throw std::invalid_argument("asymptotic_inconstancy: symbol missing from value map");
    const double gap = b->second - a->second;
    inc += (std::sqrt(1.0 + gap * gap) - 1.0) * f;
  }
  return inc;
}

IncidenceMatrix incidence_matrix(const Morphism& m) {
  const auto& alphabet = m.alphabet();
  std::map<Symbol, std::size_t> index;
  for (std::size_t i = 0; i < alphabet.size(); ++i) index[alphabet[i]] = i;
  IncidenceMatrix out;
  out.alphabet = alphabet;
  out.matrix.assign(alphabet.size(),
                    std::vector<std::int64_t>(alphabet.size(), 0));
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (const Symbol s : m.image(alphabet[i]))
      ++out.matrix[i][index.at(s)];
  return out;
}

bool is_primitive(const IncidenceMatrix& m) {
  const std::size_t n = m.matrix.size();
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = m.matrix[i][j] > 0;
  // A primitive matrix with no zero column stays positive once positive, so
  // squaring up to the Wielandt bound (n-1)^2 + 1 decides primitivity.
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || b[i][j];
    if (!any) return false;
  }
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t power = 1;; power *= 2) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i)
      for (std::size_t j = 0; j < n && all; ++j) all = b[i][j];
    if (all) return true;
    if (power >= bound) return false;
    std::vector<std::vector<bool>> sq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (b[i][k])
          for (std::size_t j = 0; j < n; ++j) sq[i][j] = sq[i][j] || b[k][j];
    b = std::move(sq);
  }
}

PairMorphism pair_morphism(const Morphism& m) {
  if (!m.uniform_length() || *m.uniform_length() < 2)
    throw std::invalid_argument("pair_morphism: need a uniform morphism, k >= 2");
  // Seed letter: first alphabet letter whose image starts with itself.
  Symbol seed = 0;
  bool found = false;
  for (const Symbol a : m.alphabet()) {
    if (m.image(a).front() == a) {
      seed = a;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::invalid_argument("pair_morphism: no prolongable letter");

  const auto block_image = [&m](const BlockKey& block) {
    const std::string& first = m.image(block.first);
    const std::string& second = m.image(block.second);
    std::vector<BlockKey> out;
    for (std::size_t i = 0; i + 1 < first.size(); ++i)
      out.push_back({first[i], first[i + 1]});
    out.push_back({first.back(), second.front()});
    return out;
  };

  // Discover blocks reachable from the fixed point's initial block and name
  // them a, b, c, ... in discovery order.
  const BlockKey initial{m.image(seed)[0], m.image(seed)[1]};
  std::map<BlockKey, Symbol> letter_of;
  std::map<Symbol, BlockKey> block_of;
  std::deque<BlockKey> frontier{initial};
  const auto letter_for = [&](const BlockKey& block) {
    const auto it = letter_of.find(block);
    if (it != letter_of.end()) return it->second;
    const Symbol letter = static_cast<Symbol>('a' + letter_of.size());
    letter_of[block] = letter;
    block_of[letter] = block;
    frontier.push_back(block);
    return letter;
  };
  letter_of[initial] = 'a';
  block_of['a'] = initial;

  std::vector<std::pair<Symbol, std::string>> rules;
  while (!frontier.empty()) {
    const BlockKey block = frontier.front();
    frontier.pop_front();
    std::string image;
    for (const BlockKey& b : block_image(block)) image.push_back(letter_for(b));
    rules.emplace_back(letter_of.at(block), image);
  }
  std::sort(rules.begin(), rules.end());
  return {Morphism(std::move(rules)), std::move(block_of), 'a'};
}

std::map<Symbol, double> perron_frequencies(const Morphism& m) {
  if (!m.uniform_length())
    throw std::invalid_argument("perron_frequencies: need a uniform morphism");
  const IncidenceMatrix im = incidence_matrix(m);
  if (!is_primitive(im))
    throw NotPrimitiveError("perron_frequencies: incidence matrix not primitive");

  const std::size_t n = im.matrix.size();
  const double k = static_cast<double>(*m.uniform_length());
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  for (int iter = 0; iter < 100000; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        next[j] += v[i] * static_cast<double>(im.matrix[i][j]);
    for (double& x : next) x /= k;  // row sums are k, so sum(v) stays 1
    double residual = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      residual = std::max(residual, std::abs(next[j] - v[j]) * k);
    v.swap(next);
    if (residual < 1e-12) break;
  }
  std::map<Symbol, double> out;
  for (std::size_t i = 0; i < n; ++i) out[im.alphabet[i]] = v[i];
  return out;
}

BlockFrequencies exact_block_frequencies(const Morphism& m) {
  const PairMorphism pm = pair_morphism(m);
  const std::map<Symbol, double> letter_freqs = perron_frequencies(pm.morphism);
  BlockFrequencies out;
  for (const auto& [letter, freq] : letter_freqs)
    out.freqs[pm.blocks.at(letter)] = freq;
  return out;
}

double periodic_inconstancy(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("periodic_inconstancy: d >= 1 required");
  const double dd = static_cast<double>(d);
  return (dd - 1.0 + 2.0 * kSqrt2) / (dd + 1.0);
}

double sturmian_inconstancy(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument(
        "sturmian_inconstancy: slope must lie in (0, 1/2); pass 1 - alpha for "
        "sequences without the block 00");
  return 1.0 + 2.0 * (kSqrt2 - 1.0) * alpha;
}

std::map<std::string, double> named_constants() {
  return {{"random", (1.0 + kSqrt2) / 2.0},
          {"thue_morse", (1.0 + 2.0 * kSqrt2) / 3.0},
          {"rudin_shapiro", (1.0 + kSqrt2) / 2.0},
          {"paperfolding", (1.0 + kSqrt2) / 2.0},
          {"alternating", kSqrt2}};
}

}  // namespace crofton
