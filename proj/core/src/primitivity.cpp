#include "mlca/primitivity.hpp"

namespace mlca {

Poly powmod(const Poly& a, const mpz_class& e, const Poly& m) {
  if (e.fits_ulong_p()) return powmod(a, std::uint64_t(e.get_ui()), m);
  Poly base = a % m;
  Poly acc = Poly::one(a.field());
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, base, m);
    if (i + 1 < bits) base = mulmod(base, base, m);
  }
  return acc;
}

namespace {

// x^(q^k) mod p by k successive q-th powers of the running value
Poly frobenius_power_of_x(const Poly& p, unsigned k) {
  Poly cur = Poly::x(p.field()) % p;
  for (unsigned i = 0; i < k; ++i) cur = powmod(cur, std::uint64_t(p.field().q()), p);
  return cur;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const Poly& p) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("irreducibility requires degree >= 1");
  unsigned n = unsigned(p.degree());
  if (n == 1) return true;
  // work with the monic associate; unit factors are irrelevant
  Poly monic = p;
  if (p.leading() != 1)
    monic = Poly::constant(p.field(), p.field().inv(p.leading())) * p;
  const Poly x = Poly::x(p.field());
  if (frobenius_power_of_x(monic, n) != x % monic) return false;
  for (unsigned r : prime_divisors(n)) {
    Poly h = frobenius_power_of_x(monic, n / r) - (x % monic);
    if (h.is_zero()) return false;
    Poly g = gcd(h, monic);
    if (g.is_zero() || g.degree() != 0) return false;
  }
  return true;
}

mpz_class field_order_minus_one(const Poly& p) {
  mpz_class order;
  mpz_ui_pow_ui(order.get_mpz_t(), p.field().q(), unsigned(p.degree()));
  return order - 1;
}

bool is_primitive(const Poly& p, const FactorBudget& budget) {
  if (!is_irreducible(p)) return false;
  if (p.coeff(0) == 0) return false;  // p = x: zero is not a generator
  mpz_class group = field_order_minus_one(p);
  if (group == 1) return true;
  for (const auto& [prime, mult] : factor_integer(group, budget)) {
    (void)mult;
    Poly t = powmod(Poly::x(p.field()), mpz_class(group / prime), p);
    if (t.is_one()) return false;
  }
  return true;
}

}  // namespace mlca
