#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlca/automaton.hpp"
#include "mlca/maximality.hpp"

namespace mlca {

/// Swaps the rules at the given cells for their complements (90 -> 165,
/// 150 -> 105); the linear core stays put and the inversion vector gains a
/// 1 at each chosen position.
RuleVector complementize(const RuleVector& rules, const std::vector<std::size_t>& positions);

/// Rank condition for a cycle of length k in the complemented CA (T, F):
/// rank([T^k + I]) = rank([T^k + I, (I + T + ... + T^(k-1)) F]).
bool cycle_exists(const GfMatrix& t, const std::vector<std::uint8_t>& inversion, std::uint64_t k);

struct ComplementedCycles {
  CycleStructure structure;
  /// Identical-cycle-structure theorem applied (core characteristic
  /// polynomial has no factor x+1) instead of enumerating.
  bool via_theorem = false;
};

/// Cycle structure of a complemented CA; falls back to brute-force
/// enumeration when the theorem shortcut does not apply.
ComplementedCycles complemented_cycle_structure(const RuleVector& rules,
                                                const MaximalityOptions& opts = {});

/// The marginal configuration: the unique x with (T + I)x = F, when T + I
/// is invertible.
std::optional<Configuration> complemented_fixed_point(const RuleVector& rules);

}  // namespace mlca
