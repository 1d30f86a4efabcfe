#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mlca/automaton.hpp"
#include "mlca/factor.hpp"

namespace mlca {

/// Multiset of (cycle length, count) of a transition diagram, plus the
/// number of configurations that never return (zero for reversible CAs).
struct CycleStructure {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;  // sorted by length
  std::uint64_t transients = 0;

  std::uint64_t total() const;
  std::string to_string() const;  // "[1(1),1(15)]" notation
  bool operator==(const CycleStructure&) const = default;
};

struct MaximalityOptions {
  std::uint64_t walk_limit = std::uint64_t(1) << 28;          // straight-walk steps
  std::uint64_t enumeration_budget = std::uint64_t(1) << 24;  // q^n for full enumeration
};

enum class MaximalityMethod { Exhaustive, Primitivity };

struct MaximalityVerdict {
  bool maximal = false;
  MaximalityMethod method = MaximalityMethod::Exhaustive;
  std::optional<std::uint64_t> cycle_length;
};

/// det(T) != 0 for linear/complemented vectors; brute-force injectivity for
/// GeneralBinary (bounded by the enumeration budget).
bool is_reversible(const RuleVector& rules, const MaximalityOptions& opts = {});

/// Walks the cycle containing 0^(n-1)1 and compares its length with q^n - 1.
/// Complemented and non-linear vectors, whose marginal configuration is not
/// the zero word, are decided by full cycle enumeration instead.
MaximalityVerdict decide_maximal_exhaustive(const RuleVector& rules,
                                            const MaximalityOptions& opts = {});

/// Maximal iff the null-boundary characteristic polynomial is primitive.
MaximalityVerdict decide_maximal_primitive(const RuleVector& rules,
                                           const FactorBudget& budget = {});

/// Exact cycle multiset of the transition function.
CycleStructure cycle_structure(const RuleVector& rules, const MaximalityOptions& opts = {});

/// Substitutes the given rule numbers at the given cell positions of a base
/// vector and decides maximality of the resulting non-linear CA by
/// exhaustive enumeration.
bool verify_nonlinear_substitution(const RuleVector& base,
                                   const std::vector<std::size_t>& positions,
                                   const std::vector<unsigned>& replacement_rules,
                                   const MaximalityOptions& opts = {});

}  // namespace mlca
