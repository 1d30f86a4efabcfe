#pragma once

#include <cstdint>

#include "mlca/automaton.hpp"

namespace mlca::detail {

/// Transition function on configuration indices (cell 0 = least significant
/// digit; for GF(2) the index is the bit-packed configuration). GF(2) linear
/// and complemented vectors step in a handful of word operations.
class Stepper {
 public:
  explicit Stepper(const RuleVector& rules);

  std::uint64_t operator()(std::uint64_t x) const {
    switch (mode_) {
      case Mode::PackedLinear:
        return (((x << 1) & amask_) ^ (x & dmask_) ^ ((x >> 1) & bmask_) ^ fmask_) & mask_;
      case Mode::PackedGeneral:
        return step_general(x);
      case Mode::Generic:
        return step_generic(x);
    }
    return 0;
  }

  std::size_t cells() const { return n_; }
  /// q^n; throws std::invalid_argument if it does not fit 64 bits.
  std::uint64_t state_count() const;

 private:
  enum class Mode { PackedLinear, PackedGeneral, Generic } mode_;
  std::size_t n_;
  std::uint32_t q_;
  std::uint64_t mask_ = 0, amask_ = 0, dmask_ = 0, bmask_ = 0, fmask_ = 0;
  std::vector<std::uint8_t> tables_;
  std::vector<LinearRule> triples_;

  std::uint64_t step_general(std::uint64_t x) const;
  std::uint64_t step_generic(std::uint64_t x) const;
};

}  // namespace mlca::detail
