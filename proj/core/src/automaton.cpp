#include "mlca/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mlca {

Boundary parse_boundary(const std::string& text) {
  if (text == "null") return Boundary::Null;
  if (text == "periodic") return Boundary::Periodic;
  if (text == "intermediate") return Boundary::Intermediate;
  throw std::invalid_argument("unknown boundary condition: " + text);
}

std::string to_string(Boundary bc) {
  switch (bc) {
    case Boundary::Null: return "null";
    case Boundary::Periodic: return "periodic";
    case Boundary::Intermediate: return "intermediate";
  }
  return "?";
}

unsigned linear_rule_number(const LinearRule& r) {
  unsigned w = 0;
  for (unsigned rmt = 0; rmt < 8; ++rmt) {
    unsigned x = (rmt >> 2) & 1, y = (rmt >> 1) & 1, z = rmt & 1;
    unsigned next = (r.a * x + r.d * y + r.b * z) & 1;
    w |= next << rmt;
  }
  return w;
}

DecodedRule decode_rule_number(unsigned w) {
  if (w > 255) throw std::invalid_argument("rule number must be in 0..255");
  for (std::uint8_t a : {0, 1})
    for (std::uint8_t d : {0, 1})
      for (std::uint8_t b : {0, 1}) {
        LinearRule r{a, d, b};
        unsigned lin = linear_rule_number(r);
        if (lin == w) return {DecodedRule::Kind::Linear, r, std::uint8_t(w)};
        if ((lin ^ 0xffu) == w) return {DecodedRule::Kind::Complemented, r, std::uint8_t(w)};
      }
  return {DecodedRule::Kind::NonLinear, {}, std::uint8_t(w)};
}

// ---- RuleVector ----

RuleVector RuleVector::rules90150(const std::vector<std::uint8_t>& d150) {
  if (d150.empty()) throw std::invalid_argument("rule vector must have length >= 1");
  RuleVector rv(gf2(), RuleKind::Linear90150, d150.size());
  rv.triples_.reserve(d150.size());
  for (auto d : d150) rv.triples_.push_back({1, std::uint8_t(d ? 1 : 0), 1});
  return rv;
}

RuleVector RuleVector::linear_gfq(Fq field, std::vector<LinearRule> rules) {
  if (rules.empty()) throw std::invalid_argument("rule vector must have length >= 1");
  for (auto& r : rules)
    if (r.a >= field.q() || r.d >= field.q() || r.b >= field.q())
      throw std::invalid_argument("rule coefficient out of field range");
  RuleVector rv(field, RuleKind::LinearGFq, rules.size());
  rv.triples_ = std::move(rules);
  return rv;
}

RuleVector RuleVector::general_binary(std::vector<std::uint8_t> tables) {
  if (tables.empty()) throw std::invalid_argument("rule vector must have length >= 1");
  RuleVector rv(gf2(), RuleKind::GeneralBinary, tables.size());
  rv.tables_ = std::move(tables);
  return rv;
}

RuleVector RuleVector::complemented(const RuleVector& core, std::vector<std::uint8_t> inversion) {
  if (!core.is_linear()) throw std::invalid_argument("complemented core must be linear");
  if (core.field().q() != 2) throw std::invalid_argument("complemented CAs are defined over GF(2)");
  if (inversion.size() != core.size()) throw std::invalid_argument("inversion vector length mismatch");
  if (std::all_of(inversion.begin(), inversion.end(), [](std::uint8_t f) { return f == 0; }))
    throw std::invalid_argument("inversion vector must be nonzero");
  RuleVector rv(core.field(), RuleKind::Complemented, core.size());
  rv.triples_ = core.triples_;
  for (auto& f : inversion) f = f ? 1 : 0;
  rv.inversion_ = std::move(inversion);
  return rv;
}

RuleVector RuleVector::from_wolfram(const std::vector<unsigned>& numbers) {
  if (numbers.empty()) throw std::invalid_argument("rule vector must have length >= 1");
  std::vector<DecodedRule> decoded;
  decoded.reserve(numbers.size());
  bool any_nonlinear = false, any_complemented = false, all_90150 = true;
  for (unsigned w : numbers) {
    decoded.push_back(decode_rule_number(w));
    const auto& d = decoded.back();
    any_nonlinear |= d.kind == DecodedRule::Kind::NonLinear;
    any_complemented |= d.kind == DecodedRule::Kind::Complemented;
    all_90150 &= d.kind == DecodedRule::Kind::Linear && d.triple.a == 1 && d.triple.b == 1;
  }
  if (any_nonlinear) {
    std::vector<std::uint8_t> tables;
    for (unsigned w : numbers) tables.push_back(std::uint8_t(w));
    return general_binary(std::move(tables));
  }
  std::vector<LinearRule> cores;
  for (const auto& d : decoded) cores.push_back(d.triple);
  if (any_complemented) {
    std::vector<std::uint8_t> inversion;
    for (const auto& d : decoded)
      inversion.push_back(d.kind == DecodedRule::Kind::Complemented ? 1 : 0);
    bool cores_90150 = true;
    for (const auto& c : cores) cores_90150 &= c.a == 1 && c.b == 1;
    RuleVector core = cores_90150 ? [&] {
      std::vector<std::uint8_t> d;
      for (const auto& c : cores) d.push_back(c.d);
      return rules90150(d);
    }() : linear_gfq(gf2(), cores);
    return complemented(core, std::move(inversion));
  }
  if (all_90150) {
    std::vector<std::uint8_t> d;
    for (const auto& c : cores) d.push_back(c.d);
    return rules90150(d);
  }
  return linear_gfq(gf2(), std::move(cores));
}

namespace {

std::vector<unsigned> parse_csv_numbers(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(pos, end - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed number '" + tok + "' in list");
    out.push_back(unsigned(std::stoul(tok)));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

// minimal parser for "[[a,d,b],[a,d,b],...]"
std::vector<LinearRule> parse_triples(const std::string& s) {
  std::vector<LinearRule> out;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c) throw std::invalid_argument("malformed rule triple list");
    ++i;
  };
  auto number = [&]() -> unsigned {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (start == i) throw std::invalid_argument("malformed rule triple list");
    return unsigned(std::stoul(s.substr(start, i - start)));
  };
  expect('[');
  skip_ws();
  while (true) {
    expect('[');
    unsigned a = number();
    expect(',');
    unsigned d = number();
    expect(',');
    unsigned b = number();
    expect(']');
    if (a > 255 || d > 255 || b > 255) throw std::invalid_argument("rule coefficient out of range");
    out.push_back({std::uint8_t(a), std::uint8_t(d), std::uint8_t(b)});
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (i != s.size()) throw std::invalid_argument("trailing text after rule triple list");
  return out;
}

}  // namespace

RuleVector RuleVector::parse(const std::string& text, std::uint32_t q) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rule vector text");
  if (text[first] == '[') return linear_gfq(Fq(q), parse_triples(text));
  if (q != 2) throw std::invalid_argument("Wolfram rule lists are defined over GF(2)");
  return from_wolfram(parse_csv_numbers(text));
}

const std::vector<LinearRule>& RuleVector::triples() const {
  if (kind_ == RuleKind::GeneralBinary)
    throw std::invalid_argument("non-linear rule vector has no linear triples");
  return triples_;
}

const std::vector<std::uint8_t>& RuleVector::tables() const {
  if (kind_ != RuleKind::GeneralBinary) throw std::invalid_argument("rule vector has no tables");
  return tables_;
}

const std::vector<std::uint8_t>& RuleVector::inversion() const {
  if (kind_ != RuleKind::Complemented) throw std::invalid_argument("rule vector has no inversion vector");
  return inversion_;
}

bool RuleVector::d150(std::size_t i) const {
  if (kind_ != RuleKind::Linear90150 && kind_ != RuleKind::Complemented)
    throw std::invalid_argument("not a 90-150 rule vector");
  return triples_[i].d != 0;
}

RuleVector RuleVector::core() const {
  if (kind_ != RuleKind::Complemented) throw std::invalid_argument("core requires a complemented vector");
  bool all_90150 = true;
  for (const auto& t : triples_) all_90150 &= t.a == 1 && t.b == 1;
  if (all_90150) {
    std::vector<std::uint8_t> d;
    for (const auto& t : triples_) d.push_back(t.d);
    return rules90150(d);
  }
  return linear_gfq(field_, triples_);
}

std::vector<unsigned> RuleVector::wolfram_numbers() const {
  if (field_.q() != 2) throw std::invalid_argument("Wolfram numbers require GF(2)");
  std::vector<unsigned> out;
  switch (kind_) {
    case RuleKind::Linear90150:
    case RuleKind::LinearGFq:
      for (const auto& t : triples_) out.push_back(linear_rule_number(t));
      break;
    case RuleKind::Complemented:
      for (std::size_t i = 0; i < size_; ++i) {
        unsigned w = linear_rule_number(triples_[i]);
        out.push_back(inversion_[i] ? (w ^ 0xffu) : w);
      }
      break;
    case RuleKind::GeneralBinary:
      for (auto t : tables_) out.push_back(t);
      break;
  }
  return out;
}

std::string RuleVector::to_string() const {
  if (field_.q() == 2) {
    std::string s;
    for (unsigned w : wolfram_numbers()) {
      if (!s.empty()) s += ',';
      s += std::to_string(w);
    }
    return s;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    if (i) s += ',';
    s += '[' + std::to_string(triples_[i].a) + ',' + std::to_string(triples_[i].d) + ',' +
         std::to_string(triples_[i].b) + ']';
  }
  return s + ']';
}

// ---- Configuration ----

Configuration Configuration::zero(Fq field, std::size_t n) {
  return {field, std::vector<std::uint8_t>(n, 0)};
}

Configuration Configuration::parse(const std::string& text, Fq field) {
  std::vector<std::uint8_t> states;
  if (text.find(',') != std::string::npos) {
    for (unsigned v : parse_csv_numbers(text)) {
      if (v >= field.q()) throw std::invalid_argument("cell state out of field range");
      states.push_back(std::uint8_t(v));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit((unsigned char)c)) throw std::invalid_argument("malformed configuration");
      unsigned v = unsigned(c - '0');
      if (v >= field.q()) throw std::invalid_argument("cell state out of field range");
      states.push_back(std::uint8_t(v));
    }
  }
  if (states.empty()) throw std::invalid_argument("empty configuration");
  return {field, std::move(states)};
}

std::string Configuration::to_string() const {
  std::string s;
  bool compact = field.q() <= 9;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(int(states[i]));
  }
  return s;
}

std::uint64_t Configuration::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = states.size(); i-- > 0;) idx = idx * field.q() + states[i];
  return idx;
}

Configuration Configuration::from_index(Fq field, std::size_t n, std::uint64_t idx) {
  Configuration c = zero(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    c.states[i] = std::uint8_t(idx % field.q());
    idx /= field.q();
  }
  return c;
}

// ---- linear machinery ----

GfMatrix build_matrix(const RuleVector& rules, Boundary bc) {
  if (!rules.is_linear() && rules.kind() != RuleKind::Complemented)
    throw std::invalid_argument("transition matrix requires linear rules");
  std::size_t n = rules.size();
  if (bc == Boundary::Intermediate && n < 3)
    throw std::invalid_argument("intermediate boundary requires n >= 3");
  const auto& t = rules.triples();
  const Fq& f = rules.field();
  GfMatrix m(f, n, n);
  // contributions accumulate: a 2-cell periodic CA sees its lone neighbor
  // from both sides, so the weights add
  auto add = [&](std::size_t i, std::size_t j, std::uint8_t w) {
    m.set(i, j, f.add(m.at(i, j), w));
  };
  for (std::size_t i = 0; i < n; ++i) {
    add(i, i, t[i].d);
    if (i > 0) add(i, i - 1, t[i].a);
    if (i + 1 < n) add(i, i + 1, t[i].b);
  }
  switch (bc) {
    case Boundary::Null:
      break;
    case Boundary::Periodic:
      add(0, (n - 1) % n, t[0].a);
      add(n - 1, 0, t[n - 1].b);
      break;
    case Boundary::Intermediate:
      add(0, 2, t[0].a);
      add(n - 1, n - 3, t[n - 1].b);
      break;
  }
  return m;
}

Configuration step(const RuleVector& rules, const Configuration& x) {
  if (x.states.size() != rules.size()) throw std::invalid_argument("configuration length mismatch");
  std::size_t n = rules.size();
  const Fq& f = rules.field();
  Configuration y = Configuration::zero(f, n);
  if (rules.kind() == RuleKind::GeneralBinary) {
    const auto& tables = rules.tables();
    for (std::size_t i = 0; i < n; ++i) {
      unsigned left = i > 0 ? x.states[i - 1] : 0;
      unsigned self = x.states[i];
      unsigned right = i + 1 < n ? x.states[i + 1] : 0;
      unsigned rmt = (left << 2) | (self << 1) | right;
      y.states[i] = std::uint8_t((tables[i] >> rmt) & 1);
    }
    return y;
  }
  const auto& t = rules.triples();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t acc = std::uint32_t(t[i].d) * x.states[i];
    if (i > 0) acc += std::uint32_t(t[i].a) * x.states[i - 1];
    if (i + 1 < n) acc += std::uint32_t(t[i].b) * x.states[i + 1];
    y.states[i] = std::uint8_t(acc % f.q());
  }
  if (rules.kind() == RuleKind::Complemented) {
    const auto& inv = rules.inversion();
    for (std::size_t i = 0; i < n; ++i) y.states[i] = f.add(y.states[i], inv[i]);
  }
  return y;
}

Poly subpolynomial(const RuleVector& rules, int i, int j) {
  if (!rules.is_linear()) throw std::invalid_argument("subpolynomial requires linear rules");
  if (i < 0 || j >= int(rules.size()) || i > j + 1)
    throw std::invalid_argument("subpolynomial index range out of bounds");
  const Fq& f = rules.field();
  const auto& t = rules.triples();
  // signed continuant: D_k = (x - d_k) D_{k-1} - b_{k-1} a_k D_{k-2};
  // over GF(2) this is the familiar (x + d_k) D_{k-1} + D_{k-2}.
  Poly prev2 = Poly::zero(f);
  Poly prev = Poly::one(f);
  for (int k = i; k <= j; ++k) {
    Poly lead(f, {f.neg(t[std::size_t(k)].d), 1});
    Poly cur = lead * prev;
    if (k > i) {
      std::uint8_t w = f.mul(t[std::size_t(k) - 1].b, t[std::size_t(k)].a);
      cur = cur - Poly::constant(f, w) * prev2;
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

SubpolynomialPair subpolynomial_pair(const RuleVector& rules) {
  int n = int(rules.size());
  return {subpolynomial(rules, 0, n - 1), subpolynomial(rules, 0, n - 2)};
}

Poly char_poly(const RuleVector& rules, Boundary bc) {
  if (!rules.is_linear()) throw std::invalid_argument("characteristic polynomial requires linear rules");
  if (bc == Boundary::Null) return subpolynomial(rules, 0, int(rules.size()) - 1);
  return build_matrix(rules, bc).char_poly();
}

GfMatrix intermediate_realization(const RuleVector& rules) {
  if (rules.kind() != RuleKind::Linear90150)
    throw std::invalid_argument("intermediate realization requires a 90-150 vector");
  std::size_t n = rules.size();
  if (n < 4) throw std::invalid_argument("intermediate realization requires n >= 4");
  auto d = [&](std::size_t i) { return std::uint8_t(rules.d150(i) ? 1 : 0); };
  GfMatrix m(rules.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, d(i));
    if (i > 0) m.set(i, i - 1, 1);
    if (i + 1 < n) m.set(i, i + 1, 1);
  }
  // row 0 + row 1 and row n-1 + row n-2, then column 1 + column 0 and
  // column n-2 + column n-1: determinant-preserving, and the x terms cancel
  // in the touched off-diagonal entries
  m.set(0, 0, std::uint8_t(1 ^ d(0)));
  m.set(0, 1, std::uint8_t(d(0) ^ d(1)));
  m.set(0, 2, 1);
  m.set(1, 1, std::uint8_t(1 ^ d(1)));
  m.set(n - 2, n - 2, std::uint8_t(1 ^ d(n - 2)));
  m.set(n - 1, n - 3, 1);
  m.set(n - 1, n - 2, std::uint8_t(d(n - 2) ^ d(n - 1)));
  m.set(n - 1, n - 1, std::uint8_t(1 ^ d(n - 1)));
  return m;
}

RuleVector conjugate(const RuleVector& rules) {
  if (rules.kind() != RuleKind::Linear90150)
    throw std::invalid_argument("conjugate is defined for 90-150 vectors");
  std::vector<std::uint8_t> d;
  for (std::size_t i = 0; i < rules.size(); ++i) d.push_back(rules.d150(i) ? 0 : 1);
  return RuleVector::rules90150(d);
}

RuleVector reversed(const RuleVector& rules) {
  if (rules.kind() != RuleKind::Linear90150)
    throw std::invalid_argument("reversal is defined for 90-150 vectors");
  std::vector<std::uint8_t> d;
  for (std::size_t i = rules.size(); i-- > 0;) d.push_back(rules.d150(i) ? 1 : 0);
  return RuleVector::rules90150(d);
}

bool is_palindromic(const RuleVector& rules) {
  if (rules.kind() == RuleKind::GeneralBinary) {
    const auto& t = rules.tables();
    return std::equal(t.begin(), t.end(), t.rbegin());
  }
  const auto& t = rules.triples();
  if (rules.kind() == RuleKind::Complemented) {
    const auto& inv = rules.inversion();
    if (!std::equal(inv.begin(), inv.end(), inv.rbegin())) return false;
  }
  return std::equal(t.begin(), t.end(), t.rbegin());
}

}  // namespace mlca
