#include "mlca/fq.hpp"

namespace mlca {

namespace {
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

Fq::Fq(std::uint32_t q) : q_(q) {
  if (!is_prime_u32(q)) throw std::invalid_argument("field modulus must be prime");
  if (q > 251) throw std::invalid_argument("field modulus must fit byte storage (q <= 251)");
}

std::uint8_t Fq::pow(std::uint8_t a, std::uint64_t e) const {
  std::uint32_t base = a % q_, r = 1;
  while (e) {
    if (e & 1) r = r * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return std::uint8_t(r);
}

std::uint8_t Fq::inv(std::uint8_t a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero field element");
  return pow(a, q_ - 2);
}

}  // namespace mlca
