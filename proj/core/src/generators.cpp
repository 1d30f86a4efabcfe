#include "mlca/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "mlca/primitivity.hpp"

namespace mlca {

RuleVector ca90p(std::size_t n) {
  if (n < 2) throw std::invalid_argument("CA(90') requires n >= 2");
  std::vector<std::uint8_t> d(n, 0);
  d[0] = 1;
  return RuleVector::rules90150(d);
}

RuleVector ca150p(std::size_t n) {
  if (n < 2) throw std::invalid_argument("CA(150') requires n >= 2");
  std::vector<std::uint8_t> d(n, 1);
  d[0] = 0;
  return RuleVector::rules90150(d);
}

namespace {

std::size_t next_pconfig(std::size_t m, std::size_t n) {
  return 2 * m + 1 < n ? 2 * m + 1 : 2 * (n - 1 - m);
}

void check_walk_size(std::size_t n) {
  if (n < 2) throw std::invalid_argument("p-configuration walks require n >= 2");
  if (n > 62) throw std::invalid_argument("p-configuration walks support n <= 62");
}

}  // namespace

PConfigWalk walk90p(std::size_t n) {
  check_walk_size(n);
  PConfigWalk w;
  std::size_t m = 0;
  for (std::size_t i = 0;; ++i) {
    w.indices.push_back(m);
    w.gaps.push_back(std::uint64_t(1) << i);
    w.total += std::uint64_t(1) << i;
    m = next_pconfig(m, n);
    if (m == 0) break;
  }
  w.covered_all = w.indices.size() == n;
  return w;
}

PConfigWalk walk150p(std::size_t n) {
  check_walk_size(n);
  // orbits of the start (m) and the one-step image (o); hop i covers 2^i steps
  std::vector<std::size_t> m{n - 1}, o{n - 2};
  while (true) {
    std::size_t next = next_pconfig(m.back(), n);
    if (next == n - 1) break;
    m.push_back(next);
    o.push_back(next_pconfig(o.back(), n));
  }
  PConfigWalk w;
  std::size_t c = n - 1;
  std::set<std::size_t> seen;
  for (std::size_t hops = 0; hops <= n; ++hops) {
    std::size_t i = 0;
    while (i < m.size() && m[i] != c) ++i;
    if (i == m.size()) {
      // stitch breaks: the chain leaves the start orbit, so the tour is open
      w.covered_all = false;
      return w;
    }
    w.indices.push_back(c);
    seen.insert(c);
    w.gaps.push_back(std::uint64_t(1) << i);
    w.total += std::uint64_t(1) << i;
    c = o[i];
    if (c == n - 1) break;
    if (seen.count(c)) {  // closed a loop that misses the start
      w.covered_all = false;
      return w;
    }
  }
  w.covered_all = seen.size() == n && w.total == (std::uint64_t(1) << n) - 1;
  return w;
}

bool verify_walk(const RuleVector& ca, const PConfigWalk& walk) {
  if (walk.indices.empty()) return false;
  std::size_t n = ca.size();
  GfMatrix t = build_matrix(ca, Boundary::Null);
  auto pconfig = [&](std::size_t i) {
    std::vector<std::uint8_t> v(n, 0);
    v[n - 1 - i] = 1;  // p^i has cell n-1-i in state 1
    return v;
  };
  for (std::size_t k = 0; k < walk.indices.size(); ++k) {
    std::size_t from = walk.indices[k];
    std::size_t to = walk.indices[(k + 1) % walk.indices.size()];
    if (t.pow(walk.gaps[k]).apply(pconfig(from)) != pconfig(to)) return false;
  }
  return true;
}

std::optional<RuleVector> strategy(std::size_t n, int which) {
  switch (which) {
    case 1:
      if (n % 2 == 1 && walk90p(n).covered_all) return ca90p(n);
      return std::nullopt;
    case 2:
      if (n % 2 == 1 && walk150p(n).covered_all) return ca150p(n);
      return std::nullopt;
    case 3:
      if (walk90p(n).covered_all && walk150p(n).covered_all) return ca90p(n);
      return std::nullopt;
    default:
      throw std::invalid_argument("strategy must be 1, 2 or 3");
  }
}

unsigned ca_cost(const RuleVector& rules) {
  if (!rules.is_linear()) throw std::invalid_argument("cost is defined for linear rules");
  const auto& t = rules.triples();
  unsigned cost = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) cost += t[i].a;
    cost += t[i].d;
    if (i + 1 < t.size()) cost += t[i].b;
  }
  return cost;
}

RuleVector minimal_cost_search(std::size_t n, const FactorBudget& budget) {
  if (n < 2 || n > 62) throw std::invalid_argument("minimal cost search supports 2 <= n <= 62");
  // Gosper's hack walks each popcount class in increasing numeric order;
  // bit n-1-i of the pattern is cell i, so that order is lexicographic from
  // cell 0 with 90 < 150.
  for (unsigned ones = 1; ones <= n; ++ones) {
    std::uint64_t v = (std::uint64_t(1) << ones) - 1;
    std::uint64_t limit = std::uint64_t(1) << n;
    while (v < limit) {
      std::vector<std::uint8_t> d(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if ((v >> (n - 1 - i)) & 1) d[i] = 1;
      RuleVector rv = RuleVector::rules90150(d);
      if (is_primitive(char_poly(rv, Boundary::Null), budget)) return rv;
      std::uint64_t c = v & (~v + 1), r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  throw std::domain_error("no maximal length CA found up to " + std::to_string(n) + " rule 150 cells");
}

std::optional<RandomSearchHit> random_search_gfq(std::size_t n, std::uint32_t q,
                                                 std::uint64_t attempt_budget, std::uint64_t seed,
                                                 const FactorBudget& budget) {
  if (n < 1) throw std::invalid_argument("random search requires n >= 1");
  Fq field(q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> nonzero(1, q - 1);
  std::uniform_int_distribution<std::uint32_t> any(0, q - 1);
  for (std::uint64_t attempt = 1; attempt <= attempt_budget; ++attempt) {
    // a and b stay nonzero: any zero off-diagonal coefficient forces a
    // reducible characteristic polynomial, so such candidates never reach
    // the polynomial work
    std::vector<LinearRule> rules(n);
    for (auto& r : rules) {
      r.a = std::uint8_t(nonzero(rng));
      r.d = std::uint8_t(any(rng));
      r.b = std::uint8_t(nonzero(rng));
    }
    RuleVector rv = q == 2 ? [&] {
      std::vector<std::uint8_t> d;
      for (const auto& r : rules) d.push_back(r.d);
      return RuleVector::rules90150(d);
    }() : RuleVector::linear_gfq(field, rules);
    if (is_primitive(char_poly(rv, Boundary::Null), budget)) return RandomSearchHit{rv, attempt};
  }
  return std::nullopt;
}

}  // namespace mlca
