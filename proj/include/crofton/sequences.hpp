#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crofton/geometry.hpp"

namespace crofton {

using Symbol = char;

/// Substitution on a finite alphabet. `uniform_length` is set when every
/// image has the same length.
class Morphism {
 public:
  /// Rules in declaration order; every image symbol must belong to the
  /// alphabet (the rule heads) and images must be non-empty.
  explicit Morphism(std::vector<std::pair<Symbol, std::string>> rules);

  /// Parses "0:01,1:10" style rule lists.
  static Morphism parse(const std::string& spec);

  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  const std::string& image(Symbol s) const;
  std::optional<int> uniform_length() const { return uniform_length_; }

 private:
  std::vector<Symbol> alphabet_;
  std::map<Symbol, std::string> images_;
  std::optional<int> uniform_length_;
};

/// Finite prefix of a symbolic sequence, with an optional injective map from
/// symbols to real values. Without a value map, digit symbols stand for
/// their numeric value (so binary sequences default to 0 -> 0.0, 1 -> 1.0).
struct SymbolSequence {
  std::string symbols;
  std::optional<std::map<Symbol, double>> value_map;

  std::size_t size() const { return symbols.size(); }
  double value_of(Symbol s) const;
  std::vector<double> values() const;
};

/// First n symbols of the pattern repeated.
SymbolSequence periodic(const std::string& pattern, std::size_t n);

/// m_k = parity of the number of 1 bits of k.
SymbolSequence thue_morse(std::size_t n);

/// r_k = parity of the number of (possibly overlapping) 11 blocks in the
/// binary expansion of k.
SymbolSequence rudin_shapiro(std::size_t n);

/// z_{4k} = 0, z_{4k+2} = 1, z_{2k+1} = z_k.
SymbolSequence paperfolding(std::size_t n);

/// Lower mechanical word u_k = floor((k+1)*alpha + rho) - floor(k*alpha + rho),
/// alpha in (0,1). Rational alpha yields an eventually periodic word.
SymbolSequence sturmian(double alpha, double rho, std::size_t n);

/// First n symbols of the fixed point of m starting at `seed`; requires
/// m(seed) to begin with seed and have length >= 2.
SymbolSequence fixed_point(const Morphism& m, Symbol seed, std::size_t n);

/// Pointwise application of `coding`; every used symbol must be mapped.
SymbolSequence code(const SymbolSequence& seq,
                    const std::map<Symbol, Symbol>& coding);

/// i.i.d. Bernoulli(p) bits, deterministic per seed.
SymbolSequence random_binary(double p, std::uint64_t seed, std::size_t n);

/// Curve with vertices (k, value of k-th symbol), k = 0..n-1. Unlike
/// polyline_from_values, the first symbol is the ordinate at x = 0.
Polyline polyline_from_sequence(const SymbolSequence& seq);

}  // namespace crofton
