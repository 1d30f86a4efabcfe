// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values and time limits are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mlca/complemented.hpp"
#include "mlca/generators.hpp"
#include "mlca/maximality.hpp"
#include "mlca/phaseshift.hpp"
#include "mlca/primitivity.hpp"
#include "mlca/prng.hpp"
#include "mlca/synthesis.hpp"

using namespace mlca;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double limit_ms,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (") + e.what() + ")";
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  if (ms > limit_ms) {
    ok = false;
    note += " (over time limit)";
  }
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s  [%.2f ms, limit %.0f ms]%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), ms, limit_ms, note.c_str());
  std::fflush(stdout);
}

Poly gp(const std::string& text) { return Poly::parse(gf2(), text); }
RuleVector rv(const std::string& text, std::uint32_t q = 2) { return RuleVector::parse(text, q); }

RuleVector bits_rv(std::size_t n, std::uint64_t bits) {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (bits >> i) & 1;
  return RuleVector::rules90150(d);
}

std::vector<std::uint8_t> cell_sequence(const RuleVector& r, std::size_t cell, std::uint64_t len) {
  std::vector<std::uint8_t> seq;
  Configuration x = Configuration::from_index(r.field(), r.size(), 1);
  for (std::uint64_t t = 0; t < len; ++t) {
    seq.push_back(x.states[cell]);
    x = step(r, x);
  }
  return seq;
}

bool shifted_matches(const std::vector<std::uint8_t>& seq, std::uint64_t shift,
                     const std::vector<std::uint8_t>& target) {
  std::uint64_t period = seq.size();
  for (std::uint64_t t = 0; t < period; ++t)
    if (seq[(t + shift) % period] != target[t]) return false;
  return true;
}

bool square_over_gf2(const Poly& p) {
  if (p.is_zero()) return true;
  std::vector<std::uint8_t> half;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i % 2 == 1 && p.coeff(i)) return false;
    if (i % 2 == 0) half.push_back(p.coeff(i));
  }
  Poly r(gf2(), half);
  return r * r == p;
}

}  // namespace

int main() {
  criterion(1, "worked characteristic polynomials", 1.0, [] {
    return char_poly(rv("90,150,90,150"), Boundary::Null) == gp("x^4+x+1") &&
           char_poly(rv("150,150,90,150"), Boundary::Null) == gp("x^4+x^3+1");
  });

  criterion(2, "exhaustive maximality of the worked 4-cell CAs", 1.0, [] {
    MaximalityVerdict a = decide_maximal_exhaustive(rv("150,150,90,150"));
    MaximalityVerdict b = decide_maximal_exhaustive(rv("150,90,90,90"));
    return a.maximal && a.cycle_length == 15 && !b.maximal;
  });

  criterion(3, "walk and primitivity verdicts agree for every vector, n = 2..14", 120000.0, [] {
    for (std::size_t n = 2; n <= 14; ++n)
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        RuleVector r = bits_rv(n, bits);
        if (decide_maximal_exhaustive(r).maximal != decide_maximal_primitive(r).maximal)
          return false;
      }
    return true;
  });

  criterion(4, "synthesis of x^5+x^2+1 with all published intermediates", 1.0, [] {
    SynthesisResult r = synthesize(gp("x^5+x^2+1"));
    std::set<std::string> got{r.rules.to_string(), r.reversed.to_string()};
    return got == std::set<std::string>{"150,150,150,150,90", "90,150,150,150,150"} &&
           r.intermediates.f == gp("x^3+x^2+x+1") && r.intermediates.f_inverse == gp("x^3+x^2+1") &&
           r.intermediates.g == gp("x^4+x^3+x+1") && r.intermediates.beta == gp("x^4+x") &&
           r.intermediates.q == gp("x^4+x^2+1");
  });

  criterion(5, "round trip and exactly two realizations, every irreducible of degree 2..12",
            300000.0, [] {
              for (int n = 2; n <= 12; ++n) {
                std::map<Poly, std::vector<std::uint64_t>> by_poly;
                for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits)
                  by_poly[char_poly(bits_rv(std::size_t(n), bits))].push_back(bits);
                for (std::uint64_t mask = std::uint64_t(1) << n;
                     mask < (std::uint64_t(1) << (n + 1)); ++mask) {
                  Poly p = Poly::from_mask(mask);
                  if (!is_irreducible(p)) continue;
                  SynthesisResult r = synthesize(p);
                  if (char_poly(r.rules) != p || char_poly(r.reversed) != p) return false;
                  auto it = by_poly.find(p);
                  if (it == by_poly.end() || it->second.size() != 2) return false;
                  RuleVector first = bits_rv(std::size_t(n), it->second[0]);
                  RuleVector second = bits_rv(std::size_t(n), it->second[1]);
                  if (reversed(first) != second) return false;
                  std::set<std::string> enumerated{first.to_string(), second.to_string()};
                  if (enumerated !=
                      std::set<std::string>{r.rules.to_string(), r.reversed.to_string()})
                    return false;
                }
              }
              return true;
            });

  criterion(6, "phase shifts: worked 4-cell table and 6-cell orientation duality", 1000.0, [] {
    PhaseShiftReport rep = phase_shifts(rv("150,150,90,150"), 0);
    if (rep.shifts != std::vector<std::uint64_t>{15, 3, 13, 10}) return false;
    std::vector<std::vector<std::uint8_t>> seq4;
    for (std::size_t i = 0; i < 4; ++i) seq4.push_back(cell_sequence(rv("150,150,90,150"), i, 15));
    for (std::size_t i = 0; i < 4; ++i)
      if (!shifted_matches(seq4[i], rep.shifts[i], seq4[0])) return false;

    RuleVector bardell = rv("150,90,90,90,90,90");
    PhaseShiftReport rep6 = phase_shifts(bardell, 0);
    std::vector<std::vector<std::uint8_t>> seq6;
    for (std::size_t i = 0; i < 6; ++i) seq6.push_back(cell_sequence(bardell, i, 63));
    std::multiset<std::uint64_t> got(rep6.shifts.begin(), rep6.shifts.end());
    std::multiset<std::uint64_t> sarkar{63, 24, 28, 16, 30, 31};
    std::multiset<std::uint64_t> bardell_dir{63, 39, 35, 47, 33, 32};
    if (got != sarkar && got != bardell_dir) return false;
    for (std::size_t i = 0; i < 6; ++i) {
      if (!shifted_matches(seq6[i], rep6.shifts[i], seq6[0])) return false;
      // the opposite-direction shift of every non-pivot cell completes the period
      if (i > 0 && rep6.shifts[i] != 0 && (rep6.shifts[i] + (63 - rep6.shifts[i])) != 63)
        return false;
    }
    return true;
  });

  criterion(7, "periodic impossibility (n = 2..10) and palindromic factorizations (n <= 12)",
            30000.0, [] {
              for (std::size_t n = 2; n <= 10; ++n)
                for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits)
                  if (is_irreducible(char_poly(bits_rv(n, bits), Boundary::Periodic)))
                    return false;
              for (std::size_t n = 2; n <= 12; ++n) {
                std::size_t half = (n + 1) / 2;
                for (std::uint64_t h = 0; h < (std::uint64_t(1) << half); ++h) {
                  std::uint64_t bits = 0;
                  for (std::size_t i = 0; i < n; ++i)
                    if ((h >> (i < half ? i : n - 1 - i)) & 1) bits |= std::uint64_t(1) << i;
                  RuleVector r = bits_rv(n, bits);
                  Poly cp = char_poly(r);
                  if (is_irreducible(cp)) return false;
                  Poly body = cp;
                  if (n % 2 == 1) {
                    Poly mid(gf2(), {std::uint8_t(r.d150(n / 2) ? 1 : 0), 1});
                    DivMod d = divmod(cp, mid);
                    if (!d.remainder.is_zero()) return false;
                    body = d.quotient;
                  }
                  if (!square_over_gf2(body)) return false;
                }
              }
              return true;
            });

  criterion(8, "p-configuration walks match the published tables, n <= 30", 2000.0, [] {
    const std::set<std::size_t> table90 = {2, 3, 5, 6, 9, 11, 14, 18, 23, 26, 29, 30};
    const std::set<std::size_t> table150 = {2, 3, 5, 9, 11, 14, 23, 26, 29};
    for (std::size_t n = 2; n <= 30; ++n) {
      if (walk90p(n).covered_all != (table90.count(n) == 1)) return false;
      if (walk150p(n).covered_all != (table150.count(n) == 1)) return false;
    }
    // the n = 18 false positive: the walk accepts, primitivity rejects
    return walk90p(18).covered_all && !decide_maximal_primitive(ca90p(18)).maximal;
  });

  criterion(9, "complemented maximality and cycle structures", 60000.0, [] {
    MaximalityVerdict v = decide_maximal_exhaustive(rv("165,105,90,150"));
    auto fp = complemented_fixed_point(rv("165,105,90,150"));
    if (!v.maximal || cycle_structure(rv("165,105,90,150")).to_string() != "[1(1),1(15)]")
      return false;
    if (!fp || fp->index() == 0) return false;

    RuleVector c5 = rv("[[0,1,1],[1,0,1],[0,1,1],[1,1,1],[1,0,0]]", 2);
    int checked = 0;
    for (std::uint64_t f : {1, 2, 4, 8, 16, 3, 21, 31}) {
      std::vector<std::uint8_t> inversion(5);
      for (std::size_t i = 0; i < 5; ++i) inversion[i] = (f >> i) & 1;
      RuleVector comp = RuleVector::complemented(c5, inversion);
      if (cycle_structure(comp).to_string() != "[1(1),1(3),1(7),1(21)]") return false;
      ComplementedCycles cc = complemented_cycle_structure(comp);
      if (!cc.via_theorem || cc.structure.to_string() != "[1(1),1(3),1(7),1(21)]") return false;
      ++checked;
    }
    if (checked < 8) return false;

    for (std::size_t n = 2; n <= 6; ++n)
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        RuleVector core = bits_rv(n, bits);
        if (!decide_maximal_exhaustive(core).maximal) continue;
        for (std::uint64_t f = 1; f < (std::uint64_t(1) << n); ++f) {
          std::vector<std::uint8_t> inversion(n);
          for (std::size_t i = 0; i < n; ++i) inversion[i] = (f >> i) & 1;
          if (!decide_maximal_exhaustive(RuleVector::complemented(core, inversion)).maximal)
            return false;
        }
      }
    return true;
  });

  criterion(10, "GF(3) worked example and random search", 5000.0, [] {
    RuleVector g3 = rv("[[1,2,1],[2,0,1],[2,0,2]]", 3);
    Poly cp = char_poly(g3);
    if (cp != Poly::parse(Fq(3), "x^3+x^2+2x+1") || !is_primitive(cp)) return false;
    MaximalityVerdict v = decide_maximal_exhaustive(g3);
    if (!v.maximal || v.cycle_length != 26) return false;
    auto hit = random_search_gfq(3, 3, 1000, 20260810);
    return hit.has_value() && decide_maximal_primitive(hit->rules).maximal;
  });

  criterion(11, "non-linear substitutions of the published table, n = 4..12", 120000.0, [] {
    struct Row {
      const char* base;
      std::vector<std::size_t> positions;
      std::vector<unsigned> rules;
    };
    const Row rows[] = {
        {"6,90,150,80", {2}, {89}},
        {"6,150,150,150,80", {2}, {75}},
        {"6,90,90,150,90,20", {2}, {86}},
        {"10,90,150,90,150,90,20", {3}, {169}},
        {"6,150,150,90,150,150,150,20", {5}, {154}},
        {"10,150,150,150,90,90,90,90,20", {1, 5}, {30, 58}},
        {"10,150,150,90,90,90,90,150,150,20", {3}, {101}},
        {"6,90,150,150,150,90,150,90,90,150,20", {4}, {86}},
        {"10,90,150,150,150,150,90,90,90,150,150,20", {2, 7}, {86, 149}},
    };
    for (const Row& row : rows)
      if (!verify_nonlinear_substitution(rv(row.base), row.positions, row.rules)) return false;
    return true;
  });

  criterion(12, "bitstreams: published evolution and per-site period/balance", 30000.0, [] {
    const char* table3[15] = {"1000", "1100", "0010", "0101", "1101", "0001", "0011", "0110",
                              "1011", "1010", "1001", "1111", "0100", "1110", "0111"};
    StreamSpec spec =
        StreamSpec::make(rv("150,150,90,150"), Configuration::parse("1000", gf2()), 0);
    std::vector<std::uint8_t> bits = stream_bits(spec, 15);
    for (std::size_t t = 0; t < 15; ++t)
      for (std::size_t i = 0; i < 4; ++i)
        if (bits[t * 4 + i] != std::uint8_t(table3[t][i] - '0')) return false;

    for (std::size_t n : {4, 8, 12, 16}) {
      RuleVector r = minimal_cost_search(n);
      StreamSpec s = StreamSpec::make(r, Configuration::from_index(gf2(), n, 1), 0);
      std::uint64_t period = (std::uint64_t(1) << n) - 1;
      std::vector<std::uint8_t> stream = stream_bits(s, period);
      std::vector<std::uint64_t> prime_divisors;
      std::uint64_t rem = period;
      for (std::uint64_t d = 2; d * d <= rem; ++d)
        if (rem % d == 0) {
          prime_divisors.push_back(d);
          while (rem % d == 0) rem /= d;
        }
      if (rem > 1) prime_divisors.push_back(rem);
      for (std::size_t site = 0; site < n; ++site) {
        std::uint64_t ones = 0;
        for (std::uint64_t t = 0; t < period; ++t) ones += stream[t * n + site];
        if (ones != (std::uint64_t(1) << (n - 1))) return false;
        for (std::uint64_t p : prime_divisors) {
          std::uint64_t shift = period / p;
          bool same = true;
          for (std::uint64_t t = 0; t < period && same; ++t)
            same = stream[((t + shift) % period) * n + site] == stream[t * n + site];
          if (same) return false;  // a smaller period would divide this one
        }
      }
    }
    return true;
  });

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
