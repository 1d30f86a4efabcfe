#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlca/fq.hpp"
#include "mlca/matrix.hpp"
#include "mlca/poly.hpp"

namespace mlca {

enum class Boundary { Null, Periodic, Intermediate };

Boundary parse_boundary(const std::string& text);
std::string to_string(Boundary bc);

/// One linear rule R(x, y, z) = a*x + d*y + b*z over GF(q).
struct LinearRule {
  std::uint8_t a = 0, d = 0, b = 0;
  bool operator==(const LinearRule&) const = default;
};

struct DecodedRule {
  enum class Kind { Linear, Complemented, NonLinear } kind;
  LinearRule triple;       // the rule, or the linear core of a complemented rule
  std::uint8_t table = 0;  // next-state table, bit r = next state for RMT r
};

/// Classifies a Wolfram number: the 8 linear rules as (a,d,b) triples, the 8
/// complemented rules as core + flag, anything else as a raw table.
DecodedRule decode_rule_number(unsigned w);
unsigned linear_rule_number(const LinearRule& r);

enum class RuleKind { Linear90150, LinearGFq, GeneralBinary, Complemented };

/// Per-cell rule assignment of a hybrid CA.
class RuleVector {
 public:
  /// d150[i] != 0 means cell i runs rule 150, otherwise rule 90.
  static RuleVector rules90150(const std::vector<std::uint8_t>& d150);
  static RuleVector linear_gfq(Fq field, std::vector<LinearRule> rules);
  /// One 8-entry next-state table per cell, bit r = next state for RMT r.
  static RuleVector general_binary(std::vector<std::uint8_t> tables);
  /// Linear core plus inversion bits; inversion must be nonzero.
  static RuleVector complemented(const RuleVector& core, std::vector<std::uint8_t> inversion);
  /// Classifies a list of Wolfram numbers into the tightest kind.
  static RuleVector from_wolfram(const std::vector<unsigned>& numbers);
  /// "90,150,90,150" or a JSON array of [a,d,b] triples (field taken from q).
  static RuleVector parse(const std::string& text, std::uint32_t q = 2);

  const Fq& field() const { return field_; }
  RuleKind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  bool is_linear() const { return kind_ == RuleKind::Linear90150 || kind_ == RuleKind::LinearGFq; }

  const std::vector<LinearRule>& triples() const;    // linear kinds and complemented cores
  const std::vector<std::uint8_t>& tables() const;   // GeneralBinary
  const std::vector<std::uint8_t>& inversion() const;  // Complemented
  bool d150(std::size_t i) const;                    // Linear90150

  /// The linear CA under a Complemented vector.
  RuleVector core() const;

  std::vector<unsigned> wolfram_numbers() const;  // GF(2) kinds only
  std::string to_string() const;

  bool operator==(const RuleVector&) const = default;

 private:
  RuleVector(Fq field, RuleKind kind, std::size_t n) : field_(field), kind_(kind), size_(n) {}
  Fq field_;
  RuleKind kind_;
  std::size_t size_;
  std::vector<LinearRule> triples_;
  std::vector<std::uint8_t> tables_;
  std::vector<std::uint8_t> inversion_;
};

/// Length-n cell-state word over GF(q); cell 0 is the leftmost cell and is
/// printed first.
struct Configuration {
  Fq field;
  std::vector<std::uint8_t> states;

  static Configuration zero(Fq field, std::size_t n);
  /// Compact digits ("1000") for q <= 9, comma separated values otherwise.
  static Configuration parse(const std::string& text, Fq field);
  std::string to_string() const;

  /// Mixed-radix index, cell 0 least significant.
  std::uint64_t index() const;
  static Configuration from_index(Fq field, std::size_t n, std::uint64_t idx);

  bool operator==(const Configuration&) const = default;
};

/// Dependency matrix of a linear CA: tridiagonal, plus wraparound corners
/// (Periodic) or the two-inward corner taps (Intermediate).
GfMatrix build_matrix(const RuleVector& rules, Boundary bc);

/// One synchronous update under null boundary. Complemented vectors add the
/// inversion vector after the linear part.
Configuration step(const RuleVector& rules, const Configuration& x);

/// Characteristic polynomial det(xI - T), monic of degree n. Null boundary
/// uses the tridiagonal continuant recurrence; the other boundaries go
/// through the Berkowitz determinant.
Poly char_poly(const RuleVector& rules, Boundary bc = Boundary::Null);

/// Characteristic polynomial of the sub-rule-vector for cells i..j under
/// null boundary; the empty range (i == j + 1) gives 1.
Poly subpolynomial(const RuleVector& rules, int i, int j);

/// The polynomial-subpolynomial pair (D_{0,n-1}, D_{0,n-2}) that determines
/// a CA uniquely through Euclid's algorithm.
struct SubpolynomialPair {
  Poly full;
  Poly sub;
};
SubpolynomialPair subpolynomial_pair(const RuleVector& rules);

/// Intermediate-boundary linear CA with the same characteristic polynomial
/// as the given null-boundary 90-150 vector, built by the determinant
/// preserving row/column transform. The boundary cells come out with
/// general linear rules; n >= 4.
GfMatrix intermediate_realization(const RuleVector& rules);

/// 90 <-> 150 swap at every cell.
RuleVector conjugate(const RuleVector& rules);
/// Cell order reversal of a 90-150 vector.
RuleVector reversed(const RuleVector& rules);
bool is_palindromic(const RuleVector& rules);

}  // namespace mlca
