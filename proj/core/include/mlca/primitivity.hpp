#pragma once

#include <gmpxx.h>

#include "mlca/factor.hpp"
#include "mlca/poly.hpp"

namespace mlca {

Poly powmod(const Poly& a, const mpz_class& e, const Poly& m);

/// Rabin test: p of degree n is irreducible over GF(q) iff x^(q^n) = x
/// (mod p) and gcd(x^(q^(n/r)) - x, p) = 1 for every prime r | n.
bool is_irreducible(const Poly& p);

/// Irreducible with ord(x mod p) = q^n - 1, decided via x^((q^n-1)/r) != 1
/// for every prime r | q^n - 1. Needs the full factorization of q^n - 1;
/// propagates FactorBudgetError rather than guessing.
bool is_primitive(const Poly& p, const FactorBudget& budget = {});

/// q^n - 1 for the polynomial's field and degree.
mpz_class field_order_minus_one(const Poly& p);

}  // namespace mlca
