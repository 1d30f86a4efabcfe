#include "mlca/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace mlca {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw std::invalid_argument("polynomial field mismatch");
}

// ---- packed GF(2) kernels: bit i of word w = coeff of x^(64w + i) ----

using Limbs = std::vector<std::uint64_t>;

Limbs pack(const Poly& p) {
  const auto& c = p.coeffs();
  Limbs w((c.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) w[i / 64] |= std::uint64_t(1) << (i % 64);
  return w;
}

Poly unpack(const Limbs& w) {
  std::vector<std::uint8_t> c(w.size() * 64, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = std::uint8_t((w[i / 64] >> (i % 64)) & 1);
  return Poly(gf2(), std::move(c));
}

int limb_degree(const Limbs& w) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i]) return int(i) * 64 + 63 - std::countl_zero(w[i]);
  return -1;  // internal sentinel for the zero polynomial
}

bool limb_bit(const Limbs& w, int i) {
  return (w[std::size_t(i) / 64] >> (i % 64)) & 1;
}

void limb_set(Limbs& w, int i) {
  std::size_t word = std::size_t(i) / 64;
  if (word >= w.size()) w.resize(word + 1, 0);
  w[word] |= std::uint64_t(1) << (i % 64);
}

// w ^= src << k
void limb_xor_shifted(Limbs& w, const Limbs& src, int k, int src_deg) {
  if (src_deg < 0) return;
  std::size_t need = std::size_t(src_deg + k) / 64 + 1;
  if (w.size() < need) w.resize(need, 0);
  int word = k / 64, bit = k % 64;
  std::size_t src_words = std::size_t(src_deg) / 64 + 1;
  for (std::size_t i = 0; i < src_words; ++i) {
    w[i + word] ^= src[i] << bit;
    if (bit && i + word + 1 < w.size()) w[i + word + 1] ^= src[i] >> (64 - bit);
  }
}

Limbs limb_mul(const Limbs& a, const Limbs& b) {
  int da = limb_degree(a), db = limb_degree(b);
  if (da < 0 || db < 0) return {};
  Limbs r(std::size_t(da + db) / 64 + 1, 0);
  for (int i = 0; i <= db; ++i)
    if (limb_bit(b, i)) limb_xor_shifted(r, a, i, da);
  return r;
}

// a := a mod b, quotient optionally collected
void limb_divmod(Limbs& a, const Limbs& b, Limbs* quot) {
  int db = limb_degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  if (quot) quot->assign(1, 0);
  for (int i = limb_degree(a); i >= db; i = std::min(i - 1, limb_degree(a))) {
    if (!limb_bit(a, i)) continue;
    limb_xor_shifted(a, b, i - db, db);
    if (quot) limb_set(*quot, i - db);
  }
}

}  // namespace

Poly::Poly(Fq field, std::vector<std::uint8_t> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (c >= field_.q()) c = std::uint8_t(c % field_.q());
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Fq field, std::uint8_t c) {
  return Poly(field, std::vector<std::uint8_t>{c});
}

Poly Poly::monomial(Fq field, std::uint8_t coeff, std::size_t deg) {
  std::vector<std::uint8_t> c(deg + 1, 0);
  c[deg] = coeff;
  return Poly(field, std::move(c));
}

Poly Poly::from_mask(std::uint64_t mask) {
  std::vector<std::uint8_t> c;
  for (int i = 0; i < 64; ++i) c.push_back(std::uint8_t((mask >> i) & 1));
  return Poly(gf2(), std::move(c));
}

int Poly::degree() const {
  if (c_.empty()) throw std::logic_error("degree of the zero polynomial");
  return int(c_.size()) - 1;
}

std::uint8_t Poly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

std::uint8_t Poly::eval(std::uint8_t at) const {
  std::uint8_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, at), c_[i]);
  return r;
}

std::uint64_t Poly::mask() const {
  if (field_.q() != 2) throw std::logic_error("coefficient mask requires GF(2)");
  if (c_.size() > 64) throw std::logic_error("coefficient mask requires degree < 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) m |= std::uint64_t(1) << i;
  return m;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<std::uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().add(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<std::uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().sub(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(c));
}

namespace detail {

Poly mul_generic(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<std::uint64_t> acc(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) acc[i + j] += std::uint64_t(ca[i]) * cb[j];
  std::vector<std::uint8_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = std::uint8_t(acc[i] % a.field().q());
  return Poly(a.field(), std::move(c));
}

DivMod divmod_generic(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Fq& f = a.field();
  std::vector<std::uint8_t> rem(a.coeffs());
  int db = b.degree();
  std::uint8_t lead_inv = f.inv(b.leading());
  std::vector<std::uint8_t> quo(rem.size() > std::size_t(db) ? rem.size() - db : 0, 0);
  for (int i = int(rem.size()) - 1; i >= db; --i) {
    if (rem[std::size_t(i)] == 0) continue;
    std::uint8_t q = f.mul(rem[std::size_t(i)], lead_inv);
    quo[std::size_t(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[std::size_t(i - db + j)] = f.sub(rem[std::size_t(i - db + j)], f.mul(q, b.coeff(std::size_t(j))));
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly mul_gf2(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  return unpack(limb_mul(pack(a), pack(b)));
}

DivMod divmod_gf2(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Limbs rem = pack(a), quot;
  limb_divmod(rem, pack(b), &quot);
  return {unpack(quot), unpack(rem)};
}

}  // namespace detail

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field().q() == 2) return detail::mul_gf2(a, b);
  return detail::mul_generic(a, b);
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (a.field().q() == 2) return detail::divmod_gf2(a, b);
  return detail::divmod_generic(a, b);
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

GcdQuotients gcd_quotients(Poly a, Poly b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  GcdQuotients out{Poly::zero(a.field()), {}};
  while (!b.is_zero()) {
    DivMod d = divmod(a, b);
    out.quotients.push_back(d.quotient);
    a = std::move(b);
    b = std::move(d.remainder);
  }
  out.gcd = std::move(a);
  return out;
}

Poly gcd(Poly a, Poly b) { return gcd_quotients(std::move(a), std::move(b)).gcd; }

Poly derivative(const Poly& p) {
  if (p.is_zero() || p.degree() == 0) return Poly::zero(p.field());
  const Fq& f = p.field();
  std::vector<std::uint8_t> c(std::size_t(p.degree()), 0);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    c[i - 1] = f.mul(std::uint8_t(i % f.q()), p.coeff(i));
  return Poly(f, std::move(c));
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  require_same_field(a, m);
  if (m.is_zero()) throw std::domain_error("inverse modulo the zero polynomial");
  // extended Euclid, tracking the coefficient of a only
  Poly r0 = m, r1 = a % m;
  Poly t0 = Poly::zero(a.field()), t1 = Poly::one(a.field());
  while (!r1.is_zero()) {
    DivMod d = divmod(r0, r1);
    Poly t2 = t0 - d.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(d.remainder);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero() || r0.degree() != 0)
    throw std::domain_error("polynomial is not invertible modulo m");
  std::uint8_t scale = a.field().inv(r0.leading());
  return (Poly::constant(a.field(), scale) * t0) % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  require_same_field(a, m);
  if (m.is_zero()) throw std::domain_error("powmod with zero modulus");
  if (a.field().q() == 2) {
    Limbs mod = pack(m);
    Limbs base = pack(a);
    limb_divmod(base, mod, nullptr);
    Limbs acc{1};
    while (e) {
      if (e & 1) {
        acc = limb_mul(acc, base);
        limb_divmod(acc, mod, nullptr);
      }
      e >>= 1;
      if (e) {
        base = limb_mul(base, base);
        limb_divmod(base, mod, nullptr);
      }
    }
    return unpack(acc);
  }
  Poly base = a % m;
  Poly acc = Poly::one(a.field());
  while (e) {
    if (e & 1) acc = mulmod(acc, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return acc;
}

std::uint8_t trace(const Poly& a, const Poly& m) {
  if (a.field().q() != 2 || m.field().q() != 2)
    throw std::invalid_argument("trace is defined over GF(2)");
  if (m.is_zero() || m.degree() < 1) throw std::invalid_argument("trace modulus must have degree >= 1");
  int n = m.degree();
  Poly term = a % m;
  Poly sum = term;
  for (int i = 1; i < n; ++i) {
    term = mulmod(term, term, m);
    sum = sum + term;
  }
  if (!sum.is_zero() && sum.degree() != 0)
    throw std::domain_error("trace did not reduce to a constant; modulus is not irreducible");
  return sum.is_zero() ? 0 : sum.coeff(0);
}

Poly find_trace_one(const Poly& m) {
  int n = m.degree();
  Poly one = Poly::one(m.field());
  if (trace(one, m) == 1) return one;
  for (int k = 1; k < n; ++k) {
    Poly cand = Poly::monomial(m.field(), 1, std::size_t(k));
    if (trace(cand, m) == 1) return cand;
  }
  throw std::domain_error("no trace-one element found; modulus is not irreducible");
}

// ---- text formats ----

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += std::to_string(int(c_[i]));
    } else {
      if (c_[i] != 1) s += std::to_string(int(c_[i]));
      s += 'x';
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

std::string Poly::to_hex() const {
  if (field_.q() != 2) throw std::logic_error("hex form requires GF(2)");
  if (is_zero()) return "0x0";
  std::string digits;
  for (std::size_t base = 0; base < c_.size(); base += 4) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b)
      if (coeff(base + b)) v |= 1u << b;
    digits += "0123456789abcdef"[v];
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

namespace {

unsigned hex_value(char c) {
  if (c >= '0' && c <= '9') return unsigned(c - '0');
  if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
  if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
  throw std::invalid_argument("invalid hex digit in polynomial mask");
}

}  // namespace

Poly Poly::parse(Fq field, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  if (s.size() > 2 && (s[0] == '0') && (s[1] == 'x' || s[1] == 'X')) {
    if (field.q() != 2) throw std::invalid_argument("hex coefficient mask requires GF(2)");
    std::vector<std::uint8_t> c;
    for (std::size_t i = s.size(); i-- > 2;) {
      unsigned v = hex_value(s[i]);
      for (unsigned b = 0; b < 4; ++b) c.push_back(std::uint8_t((v >> b) & 1));
    }
    return Poly(field, std::move(c));
  }

  std::vector<std::uint8_t> c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");

    std::uint64_t coef = 1;
    bool have_coef = false;
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    if (i > 0) {
      coef = std::stoull(std::string(term.substr(0, i)));
      have_coef = true;
    }
    if (i < term.size() && term[i] == '*') ++i;
    std::uint64_t deg = 0;
    if (i < term.size()) {
      if (term[i] != 'x') throw std::invalid_argument("malformed polynomial term");
      ++i;
      deg = 1;
      if (i < term.size()) {
        if (term[i] != '^') throw std::invalid_argument("malformed polynomial term");
        ++i;
        if (i >= term.size() || !std::isdigit(static_cast<unsigned char>(term[i])))
          throw std::invalid_argument("malformed polynomial exponent");
        deg = std::stoull(std::string(term.substr(i)));
        for (; i < term.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(term[i])))
            throw std::invalid_argument("malformed polynomial exponent");
      }
    } else if (!have_coef) {
      throw std::invalid_argument("malformed polynomial term");
    }
    if (coef >= field.q()) throw std::invalid_argument("coefficient out of range for the field");
    if (deg > 1u << 20) throw std::invalid_argument("polynomial degree out of range");
    if (c.size() <= deg) c.resize(std::size_t(deg) + 1, 0);
    c[std::size_t(deg)] = field.add(c[std::size_t(deg)], std::uint8_t(coef));
    pos = end + 1;
    if (end == s.size()) break;
  }
  return Poly(field, std::move(c));
}

}  // namespace mlca
