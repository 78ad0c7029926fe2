#pragma once

#include <optional>
#include <vector>

#include "invcurve/algebra/scalar.hpp"

namespace invcurve {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  static Matrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Nullspace {
  std::vector<std::vector<Scalar>> basis;
  // non-rational pivots used during elimination; their vanishing changes the rank
  std::vector<Scalar> symbolic_pivots;
};

Nullspace nullspace(Matrix m);
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
// coefficients of det(t I - m), index = power of t
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

}  // namespace invcurve
