#include "mlca/maximality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mlca/primitivity.hpp"
#include "stepper.hpp"

namespace mlca {

std::uint64_t CycleStructure::total() const {
  std::uint64_t t = transients;
  for (auto [len, count] : entries) t += len * count;
  return t;
}

std::string CycleStructure::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i].second) + '(' + std::to_string(entries[i].first) + ')';
  }
  return s + ']';
}

namespace {

std::uint64_t checked_state_count(const detail::Stepper& st, std::uint64_t budget,
                                  const char* what) {
  std::uint64_t total = st.state_count();
  if (total > budget) throw std::invalid_argument(std::string(what) + " exceeds the configured budget");
  return total;
}

bool injective(const detail::Stepper& st, std::uint64_t total) {
  std::vector<std::uint8_t> hit((total + 7) / 8, 0);
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t y = st(x);
    std::uint8_t bit = std::uint8_t(1u << (y & 7));
    if (hit[y >> 3] & bit) return false;
    hit[y >> 3] |= bit;
  }
  return true;
}

// cycle decomposition of a permutation: every walk closes at its seed
CycleStructure cycles_of_permutation(const detail::Stepper& st, std::uint64_t total) {
  std::vector<std::uint8_t> visited((total + 7) / 8, 0);
  auto seen = [&](std::uint64_t v) { return (visited[v >> 3] >> (v & 7)) & 1; };
  auto mark = [&](std::uint64_t v) { visited[v >> 3] |= std::uint8_t(1u << (v & 7)); };
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (seen(s)) continue;
    std::uint64_t len = 0, cur = s;
    do {
      mark(cur);
      cur = st(cur);
      ++len;
    } while (cur != s);
    ++hist[len];
  }
  CycleStructure cs;
  for (auto [len, count] : hist) cs.entries.emplace_back(len, count);
  return cs;
}

// general functional graph: rho-shaped walks with transient tails
CycleStructure cycles_of_function(const detail::Stepper& st, std::uint64_t total) {
  std::vector<std::uint8_t> state(total, 0);  // 0 unseen, 1 on current path, 2 done
  std::map<std::uint64_t, std::uint64_t> hist;
  std::uint64_t transients = 0;
  std::vector<std::uint64_t> path;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (state[s]) continue;
    path.clear();
    std::uint64_t cur = s;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = st(cur);
    }
    if (state[cur] == 1) {
      std::size_t k = path.size();
      while (path[k - 1] != cur) --k;
      ++hist[path.size() - (k - 1)];
      transients += k - 1;
    } else {
      transients += path.size();
    }
    for (std::uint64_t v : path) state[v] = 2;
  }
  CycleStructure cs;
  for (auto [len, count] : hist) cs.entries.emplace_back(len, count);
  cs.transients = transients;
  return cs;
}

}  // namespace

bool is_reversible(const RuleVector& rules, const MaximalityOptions& opts) {
  if (rules.kind() == RuleKind::GeneralBinary) {
    detail::Stepper st(rules);
    std::uint64_t total = checked_state_count(st, opts.enumeration_budget, "injectivity check");
    return injective(st, total);
  }
  return build_matrix(rules, Boundary::Null).det() != 0;
}

CycleStructure cycle_structure(const RuleVector& rules, const MaximalityOptions& opts) {
  detail::Stepper st(rules);
  std::uint64_t total = checked_state_count(st, opts.enumeration_budget, "cycle enumeration");
  if (is_reversible(rules, opts)) return cycles_of_permutation(st, total);
  return cycles_of_function(st, total);
}

MaximalityVerdict decide_maximal_exhaustive(const RuleVector& rules, const MaximalityOptions& opts) {
  MaximalityVerdict v;
  v.method = MaximalityMethod::Exhaustive;
  if (rules.is_linear()) {
    detail::Stepper st(rules);
    std::uint64_t total = st.state_count();
    if (total - 1 > opts.walk_limit)
      throw std::invalid_argument("CA size exceeds the configured walk limit");
    if (!is_reversible(rules, opts)) return v;
    // 0^n is the linear fixed point; walk the cycle through 0^(n-1)1
    std::uint64_t q = rules.field().q();
    std::uint64_t start = 1;
    for (std::size_t i = 1; i < rules.size(); ++i) start *= q;
    std::uint64_t cur = st(start), count = 1;
    while (cur != start) {
      cur = st(cur);
      ++count;
    }
    v.cycle_length = count;
    v.maximal = (count == total - 1);
    return v;
  }
  // marginal configuration of complemented / non-linear CAs is some non-zero
  // word, so enumerate the whole diagram instead of walking from a seed
  CycleStructure cs = cycle_structure(rules, opts);
  detail::Stepper st(rules);
  std::uint64_t total = st.state_count();
  std::uint64_t longest = 0;
  for (auto [len, count] : cs.entries) longest = std::max(longest, len);
  v.cycle_length = longest;
  v.maximal = cs.transients == 0 && cs.entries.size() == 2 &&
              cs.entries[0] == std::make_pair(std::uint64_t(1), std::uint64_t(1)) &&
              cs.entries[1] == std::make_pair(total - 1, std::uint64_t(1));
  if (total == 2)  // n = 1: the lone non-marginal configuration is the cycle
    v.maximal = cs.transients == 0 && cs.entries.size() == 1 &&
                cs.entries[0] == std::make_pair(std::uint64_t(1), std::uint64_t(2));
  return v;
}

MaximalityVerdict decide_maximal_primitive(const RuleVector& rules, const FactorBudget& budget) {
  if (!rules.is_linear())
    throw std::invalid_argument("primitivity-based decision requires linear rules");
  MaximalityVerdict v;
  v.method = MaximalityMethod::Primitivity;
  v.maximal = is_primitive(char_poly(rules, Boundary::Null), budget);
  if (v.maximal) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rules.size(); ++i) total *= rules.field().q();
    v.cycle_length = total - 1;
  }
  return v;
}

bool verify_nonlinear_substitution(const RuleVector& base,
                                   const std::vector<std::size_t>& positions,
                                   const std::vector<unsigned>& replacement_rules,
                                   const MaximalityOptions& opts) {
  if (positions.size() != replacement_rules.size())
    throw std::invalid_argument("positions and replacement rules must pair up");
  std::vector<unsigned> numbers = base.wolfram_numbers();
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= numbers.size()) throw std::invalid_argument("substitution position out of range");
    numbers[positions[k]] = replacement_rules[k];
  }
  std::vector<std::uint8_t> tables(numbers.begin(), numbers.end());
  RuleVector substituted = RuleVector::general_binary(std::move(tables));
  return decide_maximal_exhaustive(substituted, opts).maximal;
}

}  // namespace mlca
