#include "mlca/phaseshift.hpp"

#include <bit>
#include <stdexcept>

namespace mlca {

PhaseShiftReport phase_shifts(const RuleVector& rules, std::size_t pivot) {
  if (rules.field().q() != 2 || !rules.is_linear())
    throw std::invalid_argument("phase shifts are defined for linear CAs over GF(2)");
  std::size_t n = rules.size();
  if (pivot >= n) throw std::invalid_argument("pivot cell out of range");
  if (n > 62) throw std::invalid_argument("phase shift scan supports n <= 62");

  const std::uint64_t period = (std::uint64_t(1) << n) - 1;
  PhaseShiftReport report{pivot, std::vector<std::uint64_t>(n, 0)};
  std::vector<bool> marked(n, false);
  marked[pivot] = true;
  report.shifts[pivot] = period;
  std::size_t remaining = n - 1;

  // rows of M = T^power as bit masks; the tridiagonal T makes the
  // incremental advance M <- T*M a three-row xor per cell
  const auto& t = rules.triples();
  std::vector<std::uint64_t> m(n), next(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = 0;
    if (i > 0 && t[i].a) m[i] |= std::uint64_t(1) << (i - 1);
    if (t[i].d) m[i] |= std::uint64_t(1) << i;
    if (i + 1 < n && t[i].b) m[i] |= std::uint64_t(1) << (i + 1);
  }

  auto single_one_column = [&](std::size_t row) -> int {
    return std::popcount(m[row]) == 1 ? std::countr_zero(m[row]) : -1;
  };

  for (std::uint64_t power = 1; remaining > 0; ++power) {
    if (power > period)
      throw std::domain_error("phase shift scan did not converge; the CA is not maximal length");
    int j = single_one_column(pivot);
    if (j >= 0 && !marked[std::size_t(j)]) {
      marked[std::size_t(j)] = true;
      report.shifts[std::size_t(j)] = period - power;
      --remaining;
    } else {
      for (std::size_t i = 0; i < n && remaining > 0; ++i) {
        if (marked[i] || i == pivot || !((m[i] >> pivot) & 1)) continue;
        if (single_one_column(i) == int(pivot)) {
          marked[i] = true;
          report.shifts[i] = power;
          --remaining;
        }
      }
    }
    if (remaining > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t acc = 0;
        if (i > 0 && t[i].a) acc ^= m[i - 1];
        if (t[i].d) acc ^= m[i];
        if (i + 1 < n && t[i].b) acc ^= m[i + 1];
        next[i] = acc;
      }
      m.swap(next);
    }
  }
  return report;
}

}  // namespace mlca
