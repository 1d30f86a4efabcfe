#include "mlca/synthesis.hpp"

#include <stdexcept>

namespace mlca {

namespace {

void require_gf2(const Poly& p) {
  if (p.field().q() != 2) throw std::invalid_argument("CA synthesis is defined over GF(2)");
}

}  // namespace

Poly congruence_residual(const Poly& p, const Poly& y) {
  require_gf2(p);
  const Fq& f = p.field();
  Poly x2x(f, {0, 1, 1});  // x^2 + x
  Poly lhs = y * y + x2x * derivative(p) * y + Poly::one(f);
  return lhs % p;
}

CongruenceSolution solve_quadratic_congruence(const Poly& p) {
  require_gf2(p);
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("congruence modulus must have degree >= 1");
  const Fq& fld = p.field();
  int n = p.degree();
  if (n == 1) {
    // (x^2+x)p' vanishes mod x and mod x+1; the subpolynomial is D_{0,-1} = 1
    Poly one = Poly::one(fld);
    return {Poly::zero(fld), Poly::zero(fld), Poly::zero(fld), one, one, one};
  }
  Poly x2x(fld, {0, 1, 1});
  Poly f = (x2x * derivative(p)) % p;
  if (f.is_zero()) throw std::domain_error("(x^2+x)p' is zero mod p; p is not irreducible");
  Poly finv = inverse_mod(f, p);  // throws when gcd(f, p) != 1
  Poly g = mulmod(finv, finv, p);
  Poly theta = (n % 2 == 1) ? Poly::one(fld) : find_trace_one(p);

  // beta = sum_{i=1}^{n-1} (g + g^2 + ... + g^(2^(i-1))) theta^(2^i)
  Poly beta = Poly::zero(fld);
  Poly gpow = g;          // g^(2^(i-1))
  Poly prefix = g;        // sum_{j<i} g^(2^j)
  Poly thetapow = theta;  // theta^(2^i) after squaring below
  for (int i = 1; i <= n - 1; ++i) {
    thetapow = mulmod(thetapow, thetapow, p);
    beta = beta + mulmod(prefix, thetapow, p);
    if (i < n - 1) {
      gpow = mulmod(gpow, gpow, p);
      prefix = prefix + gpow;
    }
  }
  beta = beta % p;

  Poly q = mulmod(beta, f, p);
  if (!congruence_residual(p, q).is_zero())
    throw std::domain_error("congruence solution check failed; p is not irreducible");
  return {f, finv, g, theta, beta, q};
}

RuleVector ca_from_pair(const Poly& p, const Poly& q) {
  require_gf2(p);
  if (p.is_zero() || q.is_zero() || p.degree() != q.degree() + 1)
    throw std::invalid_argument("expected deg p = deg q + 1");
  int n = p.degree();
  GcdQuotients e = gcd_quotients(p, q);
  if (int(e.quotients.size()) != n || !e.gcd.is_one()) {
    throw std::domain_error("(p, q) is not a CA polynomial-subpolynomial pair: gcd " +
                            e.gcd.to_string() + " after " + std::to_string(e.quotients.size()) +
                            " quotients");
  }
  // quotient i is x + d_{n-1-i}
  std::vector<std::uint8_t> d(std::size_t(n), 0);
  for (int i = 0; i < n; ++i) {
    const Poly& quot = e.quotients[std::size_t(i)];
    if (quot.degree() != 1)
      throw std::domain_error("quotient " + std::to_string(i) + " has degree != 1: " +
                              quot.to_string());
    d[std::size_t(n - 1 - i)] = quot.coeff(0);
  }
  return RuleVector::rules90150(d);
}

SynthesisResult synthesize(const Poly& p) {
  CongruenceSolution sol = solve_quadratic_congruence(p);
  RuleVector rules = ca_from_pair(p, sol.q);
  RuleVector second = reversed(rules);
  return {rules, second, sol.q, sol};
}

}  // namespace mlca
