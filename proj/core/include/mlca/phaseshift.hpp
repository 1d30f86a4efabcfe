#pragma once

#include <cstdint>
#include <vector>

#include "mlca/automaton.hpp"

namespace mlca {

/// Per-cell phase shifts of a maximal-length CA: left-shifting cell i's
/// output sequence by shifts[i] reproduces the pivot cell's sequence over a
/// full period. The pivot's own entry is 2^n - 1 (one whole period).
struct PhaseShiftReport {
  std::size_t pivot = 0;
  std::vector<std::uint64_t> shifts;
};

/// Scans T, T^2, T^3, ... for single-1 rows: a single 1 in the pivot row at
/// column j marks cell j with (2^n - 1) - power, and a single 1 at column
/// pivot in row i marks cell i with power. The caller guarantees the CA is
/// maximal; on other inputs the scan stops after 2^n - 1 powers with an
/// error.
PhaseShiftReport phase_shifts(const RuleVector& rules, std::size_t pivot);

}  // namespace mlca
