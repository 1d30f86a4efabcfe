#pragma once

#include <cstdint>
#include <vector>

#include "mlca/fq.hpp"
#include "mlca/poly.hpp"

namespace mlca {

/// Dense matrix over GF(q), row major.
class GfMatrix {
 public:
  GfMatrix(Fq field, std::size_t rows, std::size_t cols);
  static GfMatrix identity(Fq field, std::size_t n);

  const Fq& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { a_[r * cols_ + c] = v; }

  GfMatrix operator*(const GfMatrix& o) const;
  GfMatrix operator+(const GfMatrix& o) const;
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;

  /// T^k by repeated squaring; T^0 = I.
  GfMatrix pow(std::uint64_t k) const;

  /// Row-echelon rank. GF(2) runs on packed words, other fields on a
  /// byte-element Gaussian elimination.
  std::size_t rank() const;
  std::uint8_t det() const;

  /// Appends one extra column (for rank([A | v]) consistency checks).
  GfMatrix augmented(const std::vector<std::uint8_t>& column) const;

  /// Characteristic polynomial det(xI - T) by the division-free Berkowitz
  /// scheme; monic of degree n over any GF(q).
  Poly char_poly() const;

  bool operator==(const GfMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  Fq field_;
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> a_;
};

}  // namespace mlca
