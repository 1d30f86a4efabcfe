#include "mlca/matrix.hpp"

#include <stdexcept>

namespace mlca {

GfMatrix::GfMatrix(Fq field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

GfMatrix GfMatrix::identity(Fq field, std::size_t n) {
  GfMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GfMatrix GfMatrix::operator*(const GfMatrix& o) const {
  if (field_ != o.field_ || cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  GfMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint8_t v = at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.set(i, j, field_.add(r.at(i, j), field_.mul(v, o.at(k, j))));
    }
  return r;
}

GfMatrix GfMatrix::operator+(const GfMatrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  GfMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

std::vector<std::uint8_t> GfMatrix::apply(const std::vector<std::uint8_t>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<std::uint8_t> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint32_t(at(i, j)) * v[j];
    r[i] = std::uint8_t(acc % field_.q());
  }
  return r;
}

GfMatrix GfMatrix::pow(std::uint64_t k) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix power requires a square matrix");
  GfMatrix acc = identity(field_, rows_);
  GfMatrix base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

namespace {

// packed GF(2) elimination; returns rank, optionally tracks whether every
// pivot exists on the main diagonal path (for det)
std::size_t rank_gf2(const GfMatrix& m) {
  std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> rows(m.rows() * words, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) rows[i * words + j / 64] |= std::uint64_t(1) << (j % 64);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t w = col / 64;
    std::uint64_t bit = std::uint64_t(1) << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(rows[pivot * words + w] & bit)) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < words; ++k)
      std::swap(rows[rank * words + k], rows[pivot * words + k]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != rank && (rows[i * words + w] & bit))
        for (std::size_t k = 0; k < words; ++k) rows[i * words + k] ^= rows[rank * words + k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_generic(GfMatrix m) {
  const Fq& f = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::uint8_t t = m.at(rank, j);
        m.set(rank, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    std::uint8_t inv = f.inv(m.at(rank, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.set(rank, j, f.mul(inv, m.at(rank, j)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      std::uint8_t factor = m.at(i, col);
      if (!factor) continue;
      for (std::size_t j = col; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(rank, j))));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t GfMatrix::rank() const {
  return field_.q() == 2 ? rank_gf2(*this) : rank_generic(*this);
}

std::uint8_t GfMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant requires a square matrix");
  if (rows_ == 0) return 1;
  // over GF(2) the determinant is 1 exactly when the packed elimination
  // finds a pivot in every column
  if (field_.q() == 2) return rank_gf2(*this) == rows_ ? 1 : 0;
  // Gaussian elimination with sign/pivot product
  GfMatrix m = *this;
  std::uint8_t d = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j) {
        std::uint8_t t = m.at(col, j);
        m.set(col, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
      d = field_.neg(d);
    }
    d = field_.mul(d, m.at(col, col));
    std::uint8_t inv = field_.inv(m.at(col, col));
    for (std::size_t i = col + 1; i < rows_; ++i) {
      std::uint8_t factor = field_.mul(inv, m.at(i, col));
      if (!factor) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.set(i, j, field_.sub(m.at(i, j), field_.mul(factor, m.at(col, j))));
    }
  }
  return d;
}

GfMatrix GfMatrix::augmented(const std::vector<std::uint8_t>& column) const {
  if (column.size() != rows_) throw std::invalid_argument("augment column length mismatch");
  GfMatrix r(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    r.set(i, cols_, column[i]);
  }
  return r;
}

Poly GfMatrix::char_poly() const {
  if (rows_ != cols_) throw std::invalid_argument("characteristic polynomial requires a square matrix");
  std::size_t n = rows_;
  if (n == 0) return Poly::one(field_);
  // Berkowitz: C_r holds det(xI - A_r) for the leading r x r block,
  // coefficients highest degree first.
  std::vector<std::uint8_t> c{1, field_.neg(at(0, 0))};
  for (std::size_t r = 2; r <= n; ++r) {
    // Toeplitz column t_0..t_r from the bordering row R, column S and corner a
    std::vector<std::uint8_t> t(r + 1);
    t[0] = 1;
    t[1] = field_.neg(at(r - 1, r - 1));
    std::vector<std::uint8_t> v(r - 1);
    for (std::size_t i = 0; i < r - 1; ++i) v[i] = at(i, r - 1);
    for (std::size_t k = 2; k <= r; ++k) {
      std::uint32_t dot = 0;
      for (std::size_t i = 0; i < r - 1; ++i) dot += std::uint32_t(at(r - 1, i)) * v[i];
      t[k] = field_.neg(std::uint8_t(dot % field_.q()));
      if (k < r) {
        std::vector<std::uint8_t> nv(r - 1, 0);
        for (std::size_t i = 0; i < r - 1; ++i) {
          std::uint32_t acc = 0;
          for (std::size_t j = 0; j < r - 1; ++j) acc += std::uint32_t(at(i, j)) * v[j];
          nv[i] = std::uint8_t(acc % field_.q());
        }
        v = std::move(nv);
      }
    }
    std::vector<std::uint8_t> nc(r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j <= i && j < c.size(); ++j)
        if (i - j <= r) acc += std::uint32_t(t[i - j]) * c[j];
      nc[i] = std::uint8_t(acc % field_.q());
    }
    c = std::move(nc);
  }
  // to little-endian coefficient order
  std::vector<std::uint8_t> le(c.rbegin(), c.rend());
  return Poly(field_, std::move(le));
}

}  // namespace mlca
