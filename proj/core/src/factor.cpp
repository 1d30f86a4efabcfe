#include "mlca/factor.hpp"

#include <algorithm>

namespace mlca {

namespace {

bool probably_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's variant of Pollard rho. Deterministic: retries advance the
// polynomial increment, never a random seed. Returns a nontrivial factor
// or throws when the iteration budget runs out.
mpz_class pollard_rho_brent(const mpz_class& n, std::uint64_t max_iterations) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::uint64_t spent = 0;
  for (mpz_class c = 1; spent < max_iterations; ++c) {
    mpz_class x = 2, y = 2, q = 1, g = 1, ys = y;
    const std::uint64_t batch = 128;
    std::uint64_t r = 1;
    while (g == 1 && spent < max_iterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1 && spent < max_iterations; k += batch) {
        ys = y;
        std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          mpz_class d = x - y;
          q = q * (d < 0 ? -d : d) % n;
        }
        spent += lim;
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        mpz_class d = x - ys;
        g = gcd(mpz_class(d < 0 ? -d : d), n);
      }
    }
    if (g != 1 && g != n) return g;
  }
  throw FactorBudgetError("pollard rho budget exhausted for " + n.get_str());
}

void factor_into(mpz_class n, const FactorBudget& budget, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class f = pollard_rho_brent(n, budget.rho_iterations);
  factor_into(f, budget, out);
  factor_into(n / f, budget, out);
}

}  // namespace

std::map<mpz_class, unsigned> factor_integer(const mpz_class& m, const FactorBudget& budget) {
  if (m < 2) throw std::invalid_argument("factor_integer requires m >= 2");
  std::map<mpz_class, unsigned> out;
  mpz_class n = m;
  for (mpz_class d = 2; d <= budget.trial_limit && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) factor_into(n, budget, out);
  return out;
}

std::map<mpz_class, unsigned> factor_integer(std::uint64_t m, const FactorBudget& budget) {
  return factor_integer(mpz_class(std::to_string(m)), budget);
}

}  // namespace mlca
