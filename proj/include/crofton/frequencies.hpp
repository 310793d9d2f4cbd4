#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crofton/sequences.hpp"

namespace crofton {

using BlockKey = std::pair<Symbol, Symbol>;

struct BlockCounts {
  std::map<BlockKey, std::int64_t> counts;
  std::int64_t total = 0;  // sequence length - 1
};

struct BlockFrequencies {
  std::map<BlockKey, double> freqs;  // sums to 1
};

/// Rows are source letters: entry (i, j) counts letter j in the image of
/// letter i. For a k-uniform morphism every row sums to k.
struct IncidenceMatrix {
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<Symbol> alphabet;
};

/// Induced k-uniform morphism on the length-2 blocks of the fixed point.
/// Block letters are synthesized in discovery order; `blocks` maps each
/// letter back to the block it names and `start` is the letter of the fixed
/// point's initial block.
struct PairMorphism {
  Morphism morphism;
  std::map<Symbol, BlockKey> blocks;
  Symbol start;
};

struct NotPrimitiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Counts of overlapping length-2 blocks; requires length >= 2.
BlockCounts count_blocks(const SymbolSequence& seq);

/// Block counts divided by (length - 1).
BlockFrequencies empirical_frequencies(const SymbolSequence& seq);

/// Inconstancy of a finite two-valued sequence (symbols '0' and '1', value
/// of '1' is h > 0, first symbol '0') via the closed hull formula rather
/// than an explicit hull. The all-zero sequence returns 1 (flat curve).
double finite_binary_inconstancy(const SymbolSequence& seq, double h);

/// Limit inconstancy of an infinite sequence from its block frequencies:
/// 1 + sum_{j<j'} (sqrt(1+(j'-j)^2) - 1)(F_{jj'} + F_{j'j}), pairs ordered
/// by the numeric values of the symbols.
double asymptotic_inconstancy(const BlockFrequencies& freqs,
                              const std::map<Symbol, double>& values);

IncidenceMatrix incidence_matrix(const Morphism& m);

/// Some power M^p, p <= |alphabet|^2, is entrywise positive.
bool is_primitive(const IncidenceMatrix& m);

/// Requires a uniform morphism of length >= 2 with a prolongable letter
/// (image starting with the letter itself). Blocks are restricted to those
/// reachable from the fixed point's initial block.
PairMorphism pair_morphism(const Morphism& m);

/// Letter frequencies of the fixed point of a primitive uniform morphism:
/// the left dominant eigenvector of the incidence matrix, normalized to sum
/// 1, by power iteration to residual 1e-12. Throws NotPrimitiveError.
std::map<Symbol, double> perron_frequencies(const Morphism& m);

/// pair_morphism + perron_frequencies, keyed by the underlying blocks.
BlockFrequencies exact_block_frequencies(const Morphism& m);

/// (d - 1 + 2*sqrt(2)) / (d + 1), the inconstancy of (0^d 1)^inf.
double periodic_inconstancy(std::int64_t d);

/// 1 + 2(sqrt(2)-1)*alpha for a Sturmian sequence of slope alpha in (0,1/2)
/// without the block 11; callers with slope > 1/2 pass 1 - alpha.
double sturmian_inconstancy(double alpha);

/// Closed-form limit inconstancies of the classical sequences.
std::map<std::string, double> named_constants();

}  // namespace crofton
