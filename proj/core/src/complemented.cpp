#include "mlca/complemented.hpp"

#include <stdexcept>

namespace mlca {

RuleVector complementize(const RuleVector& rules, const std::vector<std::size_t>& positions) {
  if (rules.kind() != RuleKind::Linear90150)
    throw std::invalid_argument("complementize requires a 90-150 rule vector");
  if (positions.empty())
    throw std::invalid_argument("complementize requires at least one position");
  std::vector<std::uint8_t> inversion(rules.size(), 0);
  for (std::size_t p : positions) {
    if (p >= rules.size()) throw std::invalid_argument("complement position out of range");
    inversion[p] = 1;
  }
  return RuleVector::complemented(rules, std::move(inversion));
}

bool cycle_exists(const GfMatrix& t, const std::vector<std::uint8_t>& inversion, std::uint64_t k) {
  if (t.rows() != t.cols() || inversion.size() != t.rows())
    throw std::invalid_argument("matrix/inversion shape mismatch");
  if (k == 0) throw std::invalid_argument("cycle length must be positive");
  // accumulated = (I + T + ... + T^(k-1)) F, built backwards Horner-style
  std::vector<std::uint8_t> acc = inversion;
  for (std::uint64_t i = 1; i < k; ++i) {
    acc = t.apply(acc);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = t.field().add(acc[j], inversion[j]);
  }
  GfMatrix tk_plus_i = t.pow(k) + GfMatrix::identity(t.field(), t.rows());
  return tk_plus_i.rank() == tk_plus_i.augmented(acc).rank();
}

ComplementedCycles complemented_cycle_structure(const RuleVector& rules,
                                                const MaximalityOptions& opts) {
  if (rules.kind() != RuleKind::Complemented)
    throw std::invalid_argument("expected a complemented rule vector");
  RuleVector core = rules.core();
  Poly p = char_poly(core, Boundary::Null);
  if (p.eval(1) != 0) {  // no factor (x+1): structure matches the linear core
    return {cycle_structure(core, opts), true};
  }
  return {cycle_structure(rules, opts), false};
}

std::optional<Configuration> complemented_fixed_point(const RuleVector& rules) {
  if (rules.kind() != RuleKind::Complemented)
    throw std::invalid_argument("expected a complemented rule vector");
  std::size_t n = rules.size();
  GfMatrix a = build_matrix(rules, Boundary::Null) + GfMatrix::identity(rules.field(), n);
  if (a.det() == 0) return std::nullopt;
  // solve (T + I) x = F by elimination on the augmented matrix
  GfMatrix aug = a.augmented(rules.inversion());
  const Fq& f = rules.field();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (aug.at(pivot, col) == 0) ++pivot;
    if (pivot != col)
      for (std::size_t j = 0; j <= n; ++j) {
        std::uint8_t tmp = aug.at(col, j);
        aug.set(col, j, aug.at(pivot, j));
        aug.set(pivot, j, tmp);
      }
    std::uint8_t inv = f.inv(aug.at(col, col));
    for (std::size_t j = col; j <= n; ++j) aug.set(col, j, f.mul(inv, aug.at(col, j)));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug.at(i, col) == 0) continue;
      std::uint8_t factor = aug.at(i, col);
      for (std::size_t j = col; j <= n; ++j)
        aug.set(i, j, f.sub(aug.at(i, j), f.mul(factor, aug.at(col, j))));
    }
  }
  Configuration x = Configuration::zero(rules.field(), n);
  for (std::size_t i = 0; i < n; ++i) x.states[i] = aug.at(i, n);
  return x;
}

}  // namespace mlca
