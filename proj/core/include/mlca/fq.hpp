#pragma once

#include <cstdint>
#include <stdexcept>

namespace mlca {

/// Prime field GF(q). Elements are stored as bytes, so q <= 251.
class Fq {
 public:
  explicit Fq(std::uint32_t q);

  std::uint32_t q() const { return q_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    std::uint32_t s = std::uint32_t(a) + b;
    return std::uint8_t(s >= q_ ? s - q_ : s);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return std::uint8_t(a >= b ? a - b : a + q_ - b);
  }
  std::uint8_t neg(std::uint8_t a) const { return std::uint8_t(a == 0 ? 0 : q_ - a); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return std::uint8_t(std::uint32_t(a) * b % q_);
  }
  std::uint8_t pow(std::uint8_t a, std::uint64_t e) const;
  /// Multiplicative inverse; throws std::domain_error on 0.
  std::uint8_t inv(std::uint8_t a) const;

  bool operator==(const Fq& o) const { return q_ == o.q_; }
  bool operator!=(const Fq& o) const { return q_ != o.q_; }

 private:
  std::uint32_t q_;
};

inline const Fq& gf2() {
  static const Fq f(2);
  return f;
}

}  // namespace mlca
