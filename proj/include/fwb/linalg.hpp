#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fwb/prime_field.hpp"

namespace fwb {

using Vector = std::vector<Coeff>;

/// Dense row-major matrix over F_p. Columns are images of source basis
/// vectors when a matrix represents a linear map.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

Matrix multiply(const PrimeField& k, const Matrix& a, const Matrix& b);
Vector apply(const PrimeField& k, const Matrix& a, const Vector& v);
bool is_zero(const Vector& v);

std::size_t rank(const PrimeField& k, Matrix m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const PrimeField& k, const Matrix& m);

/// Basis of the null space {v : m v = 0}.
std::vector<Vector> kernel(const PrimeField& k, const Matrix& m);

/// Incremental row-echelon span used for membership and independence tests.
class EchelonSpan {
 public:
  EchelonSpan(const PrimeField& k, std::size_t dim) : k_(k), dim_(dim) {}

  /// Reduces v against the span; returns true (and stores it) if v was
  /// independent.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(Vector& v) const;

  PrimeField k_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fwb
