#include <doctest.h>

#include "mlca/factor.hpp"

using namespace mlca;

TEST_SUITE_BEGIN("factor");

namespace {

// independent oracle: plain trial division all the way up
std::map<mpz_class, unsigned> trial_division(std::uint64_t m) {
  std::map<mpz_class, unsigned> out;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      ++out[mpz_class(std::to_string(d))];
      m /= d;
    }
  if (m > 1) ++out[mpz_class(std::to_string(m))];
  return out;
}

}  // namespace

TEST_CASE("small factorizations") {
  std::map<mpz_class, unsigned> f = factor_integer(15u);
  CHECK(f == std::map<mpz_class, unsigned>{{3, 1}, {5, 1}});

  CHECK(factor_integer(32767u) == trial_division(32767));   // 7 * 31 * 151
  CHECK(factor_integer(2047u) == trial_division(2047));     // 23 * 89
  CHECK(factor_integer(1024u) == std::map<mpz_class, unsigned>{{2, 10}});
  CHECK_THROWS_AS(factor_integer(1u), std::invalid_argument);
}

TEST_CASE("matches trial division on a range") {
  for (std::uint64_t m = 2; m < 3000; ++m) CHECK(factor_integer(m) == trial_division(m));
}

TEST_CASE("pollard rho splits large semiprimes") {
  mpz_class p("1000003"), q("1000033");
  std::map<mpz_class, unsigned> f = factor_integer(mpz_class(p * q));
  CHECK(f == std::map<mpz_class, unsigned>{{p, 1}, {q, 1}});

  // product of the two largest 31-bit primes is far beyond the trial bound
  mpz_class a("2147483647"), b("2147483629");
  f = factor_integer(mpz_class(a * b));
  CHECK(f == std::map<mpz_class, unsigned>{{b, 1}, {a, 1}});

  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 61);
  big -= 1;  // Mersenne prime
  CHECK(factor_integer(big) == std::map<mpz_class, unsigned>{{big, 1}});
}

TEST_CASE("budget exhaustion is an explicit error") {
  mpz_class a("1000000007"), b("1000000009");
  FactorBudget tiny;
  tiny.rho_iterations = 4;
  CHECK_THROWS_AS(factor_integer(mpz_class(a * b), tiny), FactorBudgetError);
}

TEST_SUITE_END();
