#include "stepper.hpp"

#include <stdexcept>

namespace mlca::detail {

Stepper::Stepper(const RuleVector& rules) : n_(rules.size()), q_(rules.field().q()) {
  if (q_ == 2) {
    if (n_ > 62) throw std::invalid_argument("packed stepping supports n <= 62");
    mask_ = n_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n_) - 1);
    if (rules.kind() == RuleKind::GeneralBinary) {
      mode_ = Mode::PackedGeneral;
      tables_ = rules.tables();
    } else {
      mode_ = Mode::PackedLinear;
      const auto& t = rules.triples();
      for (std::size_t i = 0; i < n_; ++i) {
        if (t[i].a) amask_ |= std::uint64_t(1) << i;
        if (t[i].d) dmask_ |= std::uint64_t(1) << i;
        if (t[i].b) bmask_ |= std::uint64_t(1) << i;
      }
      if (rules.kind() == RuleKind::Complemented) {
        const auto& f = rules.inversion();
        for (std::size_t i = 0; i < n_; ++i)
          if (f[i]) fmask_ |= std::uint64_t(1) << i;
      }
    }
  } else {
    if (rules.kind() == RuleKind::GeneralBinary || rules.kind() == RuleKind::Complemented)
      throw std::invalid_argument("general/complemented rules are defined over GF(2)");
    mode_ = Mode::Generic;
    triples_ = rules.triples();
    state_count();  // overflow guard
  }
}

std::uint64_t Stepper::state_count() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (total > (std::uint64_t(1) << 62) / q_)
      throw std::invalid_argument("state space exceeds 64-bit indexing");
    total *= q_;
  }
  return total;
}

std::uint64_t Stepper::step_general(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t left = i > 0 ? (x >> (i - 1)) & 1 : 0;
    std::uint64_t self = (x >> i) & 1;
    std::uint64_t right = i + 1 < n_ ? (x >> (i + 1)) & 1 : 0;
    std::uint64_t rmt = (left << 2) | (self << 1) | right;
    if ((tables_[i] >> rmt) & 1) y |= std::uint64_t(1) << i;
  }
  return y;
}

std::uint64_t Stepper::step_generic(std::uint64_t x) const {
  std::uint8_t digits[64];
  for (std::size_t i = 0; i < n_; ++i) {
    digits[i] = std::uint8_t(x % q_);
    x /= q_;
  }
  std::uint64_t y = 0;
  std::uint64_t place = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint32_t acc = std::uint32_t(triples_[i].d) * digits[i];
    if (i > 0) acc += std::uint32_t(triples_[i].a) * digits[i - 1];
    if (i + 1 < n_) acc += std::uint32_t(triples_[i].b) * digits[i + 1];
    y += place * (acc % q_);
    place *= q_;
  }
  return y;
}

}  // namespace mlca::detail
