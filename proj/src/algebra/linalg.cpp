#include "invcurve/algebra/linalg.hpp"

#include "invcurve/error.hpp"

namespace invcurve {

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

namespace {

// lower is simpler: rationals first, then by size of the representation
std::size_t complexity(const Scalar& s) {
  if (s.is_rational()) return 0;
  return s.numerator().size() + s.denominator().size();
}

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  std::vector<Scalar> symbolic_pivots;
  bool negate = false;
};

// reduced row echelon form in place
Echelon reduce(Matrix& m, bool full) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      if (best == m.rows() || complexity(m.at(r, col)) < complexity(m.at(best, col))) best = r;
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(best, c), m.at(row, c));
      e.negate = !e.negate;
    }
    Scalar pivot = m.at(row, col);
    if (!pivot.is_rational()) e.symbolic_pivots.push_back(pivot);
    if (full) {
      Scalar inv = pivot.inverse();
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
      }
    }
    for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = full ? m.at(r, col) : m.at(r, col) / pivot;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

Nullspace nullspace(Matrix m) {
  Echelon e = reduce(m, true);
  Nullspace out;
  out.symbolic_pivots = e.symbolic_pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -m.at(r, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(Matrix m) { return reduce(m, false).pivot_cols.size(); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  Echelon e = reduce(m, false);
  if (e.pivot_cols.size() < m.rows()) return Scalar();
  Scalar d(e.negate ? -1 : 1);
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m.at(i, i);
  return d;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier
  std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial of a non-square matrix");
  std::vector<Scalar> coeffs(n + 1);
  coeffs[n] = Scalar(1);
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next.at(i, i) += coeffs[n - k + 1];
    mk = next;
    Matrix am = a * mk;
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    coeffs[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return coeffs;
}

}  // namespace invcurve
