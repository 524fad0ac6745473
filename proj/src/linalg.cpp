#include "fwb/linalg.hpp"

#include <algorithm>

#include "fwb/error.hpp"

namespace fwb {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

Matrix multiply(const PrimeField& k, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  const std::uint64_t p = k.characteristic();
  Matrix out(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t m = 0; m < a.cols(); ++m) {
      std::uint64_t x = a(r, m);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) acc[c] = (acc[c] + x * b(m, c)) % p;
    }
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = static_cast<Coeff>(acc[c]);
  }
  return out;
}

Vector apply(const PrimeField& k, const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) fail(ErrorCode::kInvalidArgument, "matrix/vector shape mismatch");
  const std::uint64_t p = k.characteristic();
  Vector out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (v[c] != 0) acc = (acc + static_cast<std::uint64_t>(a(r, c)) * v[c]) % p;
    }
    out[r] = static_cast<Coeff>(acc);
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& k, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    Coeff inv = k.inv(m(row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = k.mul(m(row, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      Coeff f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(r, j) = k.sub(m(r, j), k.mul(f, m(row, j)));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const PrimeField& k, Matrix m) { return rref(k, m).size(); }

std::optional<Matrix> inverse(const PrimeField& k, const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kInvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots = rref(k, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

std::vector<Vector> kernel(const PrimeField& k, const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots = rref(k, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(r(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

void EchelonSpan::reduce(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Coeff f = v[pivots_[i]];
    if (f == 0) continue;
    const Vector& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] = k_.sub(v[j], k_.mul(f, row[j]));
    }
  }
}

bool EchelonSpan::insert(Vector v) {
  if (v.size() != dim_) fail(ErrorCode::kInvalidArgument, "vector dimension mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  Coeff inv = k_.inv(v[piv]);
  for (Coeff& c : v) c = k_.mul(c, inv);
  // Keep existing rows reduced at the new pivot.
  for (Vector& row : rows_) {
    Coeff f = row[piv];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] != 0) row[j] = k_.sub(row[j], k_.mul(f, v[j]));
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonSpan::contains(Vector v) const {
  if (v.size() != dim_) fail(ErrorCode::kInvalidArgument, "vector dimension mismatch");
  reduce(v);
  return is_zero(v);
}

}  // namespace fwb
