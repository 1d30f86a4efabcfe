#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlca/automaton.hpp"
#include "mlca/factor.hpp"

namespace mlca {

/// Rule 150 at cell 0, rule 90 everywhere else.
RuleVector ca90p(std::size_t n);
/// Rule 90 at cell 0, rule 150 everywhere else.
RuleVector ca150p(std::size_t n);

/// Trajectory of the p-configurations (single cells in state 1) under the
/// index map m -> 2m+1 if 2m+1 < n else 2(n-1-m). The hop from the i-th
/// visited p-configuration to the next takes exactly 2^i steps of the CA.
struct PConfigWalk {
  std::vector<std::size_t> indices;  // p-configuration indices in visit order
  std::vector<std::uint64_t> gaps;   // step counts, each a power of two
  bool covered_all = false;
  std::uint64_t total = 0;  // sum of gaps around the closed tour
};

PConfigWalk walk90p(std::size_t n);
PConfigWalk walk150p(std::size_t n);

/// Confirms every hop of a walk against the matrix dynamics:
/// T^gap maps each visited p-configuration to its successor in the chain.
bool verify_walk(const RuleVector& ca, const PConfigWalk& walk);

/// Strategy 1: CA(90') when its walk covers everything and n is odd.
/// Strategy 2: the same for CA(150'). Strategy 3: CA(90') when both walks
/// cover everything. The verdict is a candidate, not a guarantee: a few
/// sizes pass the walk yet fail primitivity.
std::optional<RuleVector> strategy(std::size_t n, int which);

/// Interconnect cost sum(a) + sum(d) + sum(b) of a linear rule vector.
unsigned ca_cost(const RuleVector& rules);

/// First 90-150 vector, ordered by number of 150 cells then lexicographic
/// reading from cell 0, whose characteristic polynomial is primitive.
RuleVector minimal_cost_search(std::size_t n, const FactorBudget& budget = {});

struct RandomSearchHit {
  RuleVector rules;
  std::uint64_t attempts = 0;
};

/// Draws rule vectors with nonzero a, b coefficients (any zero coefficient
/// forces a reducible characteristic polynomial) until one is primitive.
std::optional<RandomSearchHit> random_search_gfq(std::size_t n, std::uint32_t q,
                                                 std::uint64_t attempt_budget,
                                                 std::uint64_t seed,
                                                 const FactorBudget& budget = {});

}  // namespace mlca
