#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lrb/error.hpp"
#include "lrb/polynomial.hpp"
#include "lrb/rational.hpp"

namespace lrb {

// Dense rational matrix. Regular representations at desk scale are small
// enough that sparsity buys nothing.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj != 0) c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix c = m;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector shape mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Rational& a = at(i, j);
        if (a != 0) out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
      }
    return out;
  }

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shape mismatch");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// prod_i (M - roots[i] * I) in the given order; the factors commute, so the
// result is order-independent.
inline Matrix apply_linear_factors(const Matrix& m, const std::vector<Rational>& roots) {
  if (!m.is_square()) throw Error("apply_linear_factors needs a square matrix");
  Matrix acc = Matrix::identity(m.rows());
  for (const auto& r : roots) {
    Matrix factor = m;
    for (int i = 0; i < m.rows(); ++i) factor.at(i, i) -= r;
    acc = acc * factor;
  }
  return acc;
}

// Coefficient-form evaluation p(M) by Horner's rule.
inline Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw Error("polynomial evaluation needs a square matrix");
  const int n = m.rows();
  Matrix acc(n, n);
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * m;
    const Rational c = p.coeff(d);
    for (int i = 0; i < n; ++i) acc.at(i, i) += c;
  }
  return acc;
}

// Rank by fraction-free (Bareiss) elimination: rows are scaled to integers,
// then eliminated with exact divisions by the previous pivot, which keeps
// intermediate entries at minor size instead of product size.
inline int rank(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (int j = 0; j < cols; ++j)
      scale = boost::multiprecision::lcm(scale, denominator(m.at(i, j)));
    auto& row = a[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      row[static_cast<std::size_t>(j)] = numerator(q) * (scale / denominator(q));
    }
  }

  Integer prev = 1;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(pivot_row)]);
    const Integer pivot = a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)];
    for (int r = pivot_row + 1; r < rows; ++r) {
      auto& target = a[static_cast<std::size_t>(r)];
      const Integer head = target[static_cast<std::size_t>(col)];
      for (int j = col; j < cols; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        target[jj] = (target[jj] * pivot -
                      head * a[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(j)]) /
                     prev;
      }
    }
    prev = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

inline int kernel_dimension(const Matrix& m) { return m.cols() - rank(m); }

namespace detail {

// Row-echelon accumulator that remembers, for every stored vector, its
// expression in terms of the original insertions. Insert returns the
// dependency coefficients when the new vector is a combination of the
// stored ones.
class EchelonTracker {
 public:
  explicit EchelonTracker(int dim) : dim_(dim) {}

  // Returns empty if v was independent (now stored); otherwise the
  // coefficients c with v = sum_i c[i] * original_i.
  std::vector<Rational> insert(std::vector<Rational> v) {
    std::vector<Rational> combo(count_ + 1, Rational(0));
    combo[static_cast<std::size_t>(count_)] = 1;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const int col = pivots_[k].col;
      const Rational x = v[static_cast<std::size_t>(col)];
      if (x == 0) continue;
      const Rational f = x / pivots_[k].row[static_cast<std::size_t>(col)];
      for (int j = 0; j < dim_; ++j)
        v[static_cast<std::size_t>(j)] -= f * pivots_[k].row[static_cast<std::size_t>(j)];
      for (std::size_t j = 0; j < pivots_[k].combo.size(); ++j)
        combo[j] -= f * pivots_[k].combo[j];
    }
    int col = -1;
    for (int j = 0; j < dim_; ++j)
      if (v[static_cast<std::size_t>(j)] != 0) {
        col = j;
        break;
      }
    if (col < 0) return combo;  // dependent
    pivots_.push_back({col, std::move(v), std::move(combo)});
    ++count_;
    return {};
  }

 private:
  struct Pivot {
    int col;
    std::vector<Rational> row;
    std::vector<Rational> combo;
  };
  int dim_;
  int count_ = 0;
  std::vector<Pivot> pivots_;
};

// Least-degree monic p with p(M)v = 0, via the Krylov sequence of v.
// insert() hands back coefficients c with M^d v + sum_{i<d} c[i] M^i v = 0
// and c[d] = 1, which is the monic local minimal polynomial verbatim.
inline Polynomial local_minimal_polynomial(const Matrix& m, std::vector<Rational> v) {
  EchelonTracker span(m.rows());
  while (true) {
    std::vector<Rational> copy = v;
    auto dependency = span.insert(std::move(copy));
    if (!dependency.empty()) return Polynomial(std::move(dependency));
    v = m.apply(v);
  }
}

}  // namespace detail

// Exact minimal polynomial: per-basis-vector Krylov minimal polynomials
// combined by least common multiple.
inline Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error("minimal polynomial needs a square matrix");
  const int n = m.rows();
  if (n == 0) return Polynomial::one();
  Polynomial acc = Polynomial::one();
  for (int i = 0; i < n && acc.degree() < n; ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    // Skip basis vectors the current candidate already annihilates.
    bool killed = true;
    std::vector<Rational> u(static_cast<std::size_t>(n), Rational(0));
    {
      // Horner: u = acc(M) e.
      for (int d = acc.degree(); d >= 0; --d) {
        u = m.apply(u);
        const Rational c = acc.coeff(d);
        if (c != 0) u[static_cast<std::size_t>(i)] += c;
      }
      for (const auto& x : u)
        if (x != 0) {
          killed = false;
          break;
        }
    }
    if (killed) continue;
    acc = poly_lcm(acc, detail::local_minimal_polynomial(m, std::move(e)));
  }
  return acc.monic();
}

}  // namespace lrb
