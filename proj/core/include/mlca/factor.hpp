#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>

namespace mlca {

/// Raised when a factorization cannot be completed within the configured
/// budget. Callers must treat this as "unknown", never as a verdict.
class FactorBudgetError : public std::runtime_error {
 public:
  explicit FactorBudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorBudget {
  std::uint64_t trial_limit = 1'000'000;       // trial division bound
  std::uint64_t rho_iterations = 10'000'000;   // Brent iterations per factor
};

/// Complete prime factorization of m >= 2 as {prime -> multiplicity}.
/// Trial division up to the budget's bound, then Pollard rho with Brent
/// cycle detection. Throws FactorBudgetError if a composite survives.
std::map<mpz_class, unsigned> factor_integer(const mpz_class& m,
                                             const FactorBudget& budget = {});
std::map<mpz_class, unsigned> factor_integer(std::uint64_t m,
                                             const FactorBudget& budget = {});

}  // namespace mlca
