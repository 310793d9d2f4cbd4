#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "crofton/sequences.hpp"

namespace crofton::cli {

/// Exit codes: 0 success, 1 I/O or data error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Inconstancy of each prefix (by length) of the sequence, as a plot-ready
/// (N, I_N) series. Checkpoints must be increasing and fit the sequence.
std::vector<std::pair<std::size_t, double>> convergence_series(
    const SymbolSequence& seq, const std::vector<std::size_t>& checkpoints);

}  // namespace crofton::cli
