#include "crofton/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

namespace crofton {

Morphism::Morphism(std::vector<std::pair<Symbol, std::string>> rules) {
  if (rules.empty()) throw std::invalid_argument("Morphism: no rules");
  for (const auto& [letter, image] : rules) {
    if (image.empty())
      throw std::invalid_argument("Morphism: empty image for letter");
    if (images_.count(letter))
      throw std::invalid_argument("Morphism: duplicate rule for letter");
    alphabet_.push_back(letter);
    images_[letter] = image;
  }
  bool uniform = true;
  const std::size_t len = rules.front().second.size();
  for (const auto& [letter, image] : rules) {
    for (const Symbol s : image)
      if (!images_.count(s))
        throw std::invalid_argument("Morphism: image symbol outside alphabet");
    uniform = uniform && image.size() == len;
  }
  if (uniform) uniform_length_ = static_cast<int>(len);
}

Morphism Morphism::parse(const std::string& spec) {
  std::vector<std::pair<Symbol, std::string>> rules;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string rule =
        spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t colon = rule.find(':');
    if (colon != 1 || rule.size() < 3)
      throw std::invalid_argument("Morphism::parse: expected \"a:image\" rules");
    rules.emplace_back(rule[0], rule.substr(colon + 1));
    pos = comma == std::string::npos ? spec.size() : comma + 1;
  }
  return Morphism(std::move(rules));
}

const std::string& Morphism::image(Symbol s) const {
  const auto it = images_.find(s);
  if (it == images_.end())
    throw std::invalid_argument("Morphism: letter outside alphabet");
  return it->second;
}

double SymbolSequence::value_of(Symbol s) const {
  if (value_map) {
    const auto it = value_map->find(s);
    if (it == value_map->end())
      throw std::invalid_argument("SymbolSequence: symbol missing from value map");
    return it->second;
  }
  if (std::isdigit(static_cast<unsigned char>(s)))
    return static_cast<double>(s - '0');
  throw std::invalid_argument(
      "SymbolSequence: non-digit symbol requires a value map");
}

std::vector<double> SymbolSequence::values() const {
  std::vector<double> out;
  out.reserve(symbols.size());
  for (const Symbol s : symbols) out.push_back(value_of(s));
  return out;
}

SymbolSequence periodic(const std::string& pattern, std::size_t n) {
  if (pattern.empty()) throw std::invalid_argument("periodic: empty pattern");
  SymbolSequence seq;
  seq.symbols.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    seq.symbols.push_back(pattern[k % pattern.size()]);
  return seq;
}

SymbolSequence thue_morse(std::size_t n) {
  SymbolSequence seq;
  seq.symbols.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    seq.symbols.push_back(std::popcount(k) % 2 ? '1' : '0');
  return seq;
}

SymbolSequence rudin_shapiro(std::size_t n) {
  SymbolSequence seq;
  seq.symbols.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    seq.symbols.push_back(std::popcount(k & (k >> 1)) % 2 ? '1' : '0');
  return seq;
}

SymbolSequence paperfolding(std::size_t n) {
  SymbolSequence seq;
  seq.symbols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t m = k;
    while (m % 2 == 1) m /= 2;  // z_{2m+1} = z_m
    seq.symbols.push_back(m % 4 == 0 ? '0' : '1');
  }
  return seq;
}

SymbolSequence sturmian(double alpha, double rho, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("sturmian: alpha must lie in (0,1)");
  if (!std::isfinite(rho))
    throw std::invalid_argument("sturmian: non-finite intercept");
  SymbolSequence seq;
  seq.symbols.reserve(n);
  double prev = std::floor(rho);
  for (std::size_t k = 0; k < n; ++k) {
    const double next = std::floor(static_cast<double>(k + 1) * alpha + rho);
    seq.symbols.push_back(next - prev >= 1.0 ? '1' : '0');
    prev = next;
  }
  return seq;
}

SymbolSequence fixed_point(const Morphism& m, Symbol seed, std::size_t n) {
  const std::string& seed_image = m.image(seed);
  if (seed_image.size() < 2 || seed_image.front() != seed)
    throw std::invalid_argument(
        "fixed_point: seed image must start with the seed and have length >= 2");
  SymbolSequence seq;
  seq.symbols = seed_image;
  // The fixed point is its own image, so appending sigma(w[i]) for i = 1,2,...
  // extends the known prefix faster than it is consumed.
  for (std::size_t i = 1; seq.symbols.size() < n; ++i)
    seq.symbols += m.image(seq.symbols[i]);
  seq.symbols.resize(std::min(n, seq.symbols.size()));
  return seq;
}

SymbolSequence code(const SymbolSequence& seq,
                    const std::map<Symbol, Symbol>& coding) {
  SymbolSequence out;
  out.symbols.reserve(seq.symbols.size());
  for (const Symbol s : seq.symbols) {
    const auto it = coding.find(s);
    if (it == coding.end())
      throw std::invalid_argument("code: symbol missing from coding");
    out.symbols.push_back(it->second);
  }
  return out;
}

SymbolSequence random_binary(double p, std::uint64_t seed, std::size_t n) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("random_binary: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  SymbolSequence seq;
  seq.symbols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    // 53-bit uniform in [0,1); stable across standard libraries.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    seq.symbols.push_back(u < p ? '1' : '0');
  }
  return seq;
}

Polyline polyline_from_sequence(const SymbolSequence& seq) {
  if (seq.symbols.size() < 2)
    throw std::invalid_argument("polyline_from_sequence: need >= 2 symbols");
  std::vector<Point2> verts;
  verts.reserve(seq.symbols.size());
  for (std::size_t k = 0; k < seq.symbols.size(); ++k)
    verts.push_back({static_cast<double>(k), seq.value_of(seq.symbols[k])});
  return Polyline(std::move(verts));
}

}  // namespace crofton
