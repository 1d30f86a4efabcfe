#pragma once

#include "mlca/automaton.hpp"
#include "mlca/poly.hpp"

namespace mlca {

/// Residual of the CA quadratic congruence
///   y^2 + (x^2+x) p' y + 1  (mod p)
/// over GF(2); zero iff y is a subpolynomial of a CA realizing p.
Poly congruence_residual(const Poly& p, const Poly& y);

/// Intermediates of the congruence solver, matching the derivation order:
/// f = (x^2+x)p', g = (1/f)^2, theta with trace one, beta, and the solution
/// q = beta * f (all mod p).
struct CongruenceSolution {
  Poly f;
  Poly f_inverse;
  Poly g;
  Poly theta;
  Poly beta;
  Poly q;
};

/// Solves the quadratic congruence for an irreducible p over GF(2) via the
/// trace construction; the returned q satisfies congruence_residual(p, q) = 0.
CongruenceSolution solve_quadratic_congruence(const Poly& p);

/// Reads the 90/150 cells off the n degree-one Euclid quotients of (p, q).
/// Throws std::domain_error when (p, q) is not a CA polynomial-subpolynomial
/// pair (some quotient has degree != 1, or the gcd is not 1).
RuleVector ca_from_pair(const Poly& p, const Poly& q);

struct SynthesisResult {
  RuleVector rules;     // realization from the computed congruence root
  RuleVector reversed;  // the second realization (cell order reversed)
  Poly subpoly;         // the congruence solution used
  CongruenceSolution intermediates;
};

/// Cattell-Muzio synthesis: both 90-150 realizations of an irreducible
/// polynomial over GF(2); maximal-length CAs when p is primitive.
SynthesisResult synthesize(const Poly& p);

}  // namespace mlca
