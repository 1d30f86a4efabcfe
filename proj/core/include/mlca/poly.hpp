#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlca/fq.hpp"

namespace mlca {

/// Dense polynomial over GF(q), coefficient of x^i at index i.
/// Canonical form: no stored leading zeros; the zero polynomial stores nothing.
class Poly {
 public:
  explicit Poly(Fq field) : field_(field) {}
  Poly(Fq field, std::vector<std::uint8_t> coeffs);

  static Poly zero(Fq field) { return Poly(field); }
  static Poly one(Fq field) { return constant(field, 1); }
  static Poly x(Fq field) { return monomial(field, 1, 1); }
  static Poly constant(Fq field, std::uint8_t c);
  static Poly monomial(Fq field, std::uint8_t coeff, std::size_t deg);
  /// GF(2) polynomial from a coefficient bitmask, bit i = coeff of x^i.
  static Poly from_mask(std::uint64_t mask);
  /// Accepts "x^4+x+1", "2x^3+1", "3*x^2" style text, or a 0x... coefficient
  /// mask when the field is GF(2).
  static Poly parse(Fq field, std::string_view text);

  const Fq& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Degree of a nonzero polynomial; the zero polynomial has no degree.
  int degree() const;
  std::uint8_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint8_t leading() const;
  const std::vector<std::uint8_t>& coeffs() const { return c_; }
  std::uint8_t eval(std::uint8_t at) const;

  std::uint64_t mask() const;  // GF(2), degree < 64 only
  std::string to_string() const;
  std::string to_hex() const;  // GF(2) coefficient mask, e.g. "0x13"

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Lexicographic by (degree, coefficients); for ordered containers.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  Fq field_;
  std::vector<std::uint8_t> c_;
  void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
/// School division: a = quotient*b + remainder, deg remainder < deg b.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

struct GcdQuotients {
  Poly gcd;
  std::vector<Poly> quotients;  // in Euclid division order
};
/// Euclid's algorithm keeping the full quotient trace (no monic rescaling).
GcdQuotients gcd_quotients(Poly a, Poly b);
Poly gcd(Poly a, Poly b);

/// Formal derivative: coeff of x^(i-1) is i*coeff_i mod q.
Poly derivative(const Poly& p);
/// b with a*b = 1 (mod m); throws std::domain_error when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

/// Tr(a) = a + a^2 + ... + a^(2^(n-1)) mod m over GF(2); must reduce to a
/// constant, which it always does when m is irreducible.
std::uint8_t trace(const Poly& a, const Poly& m);
/// First polynomial with trace one under the scan order 1, x, x^2, ...
Poly find_trace_one(const Poly& m);

namespace detail {
// Generic byte-vector routines, used for every q and as the reference the
// packed GF(2) fast path is tested against.
Poly mul_generic(const Poly& a, const Poly& b);
DivMod divmod_generic(const Poly& a, const Poly& b);
Poly mul_gf2(const Poly& a, const Poly& b);
DivMod divmod_gf2(const Poly& a, const Poly& b);
}  // namespace detail

}  // namespace mlca
