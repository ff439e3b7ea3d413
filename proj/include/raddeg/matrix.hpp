#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raddeg/field.hpp"

namespace raddeg {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix. Vectors are 1 x n matrices and act by v * A.
template <ExactField F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }
  static Matrix from_rows(const F& field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }
  static Matrix row_vector(const F& field, const std::vector<Elem>& entries) {
    Matrix m(field, 1, entries.size());
    m.data_ = entries;
    return m;
  }
  static Matrix unit_vector(const F& field, std::size_t n, std::size_t i) {
    Matrix m(field, 1, n);
    m.at(0, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator[](std::size_t i) { return data_[i]; }
  const Elem& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<Elem>& data() const { return data_; }

  Matrix row(std::size_t r) const {
    Matrix v(field_, 1, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.data_[c] = at(r, c);
    return v;
  }
  void set_row(std::size_t r, const Matrix& v) {
    if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v.data_[c];
  }
  Matrix rows_range(std::size_t r0, std::size_t n) const { return block(r0, 0, n, cols_); }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b.at(r, c) = at(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) at(r0 + r, c0 + c) = b.at(r, c);
  }
  // reinterpret a matrix as one long row and back
  Matrix flattened() const {
    Matrix v = *this;
    v.rows_ = 1;
    v.cols_ = data_.size();
    return v;
  }
  Matrix reshaped(std::size_t r, std::size_t c) const {
    if (r * c != data_.size()) throw DimensionError("reshape size mismatch");
    Matrix m = *this;
    m.rows_ = r;
    m.cols_ = c;
    return m;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const auto& x = at(r, c);
        if (r == c ? !field_.is_one(x) : !field_.is_zero(x)) return false;
      }
    return true;
  }
  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.equal(data_[i], o.data_[i])) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = field_.neg(x);
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
    return *this;
  }
  Matrix scaled(const Elem& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = field_.mul(x, s);
    return r;
  }
  // this += s * o
  void add_scaled(const Matrix& o, const Elem& s) {
    check_same(o);
    if (field_.is_zero(s)) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.is_zero(o.data_[i])) data_[i] = field_.add(data_[i], field_.mul(o.data_[i], s));
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw DimensionError("product of " + shape() + " and " + o.shape());
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        const Elem* brow = &o.data_[k * o.cols_];
        Elem* rrow = &r.data_[i * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!field_.is_zero(brow[j])) rrow[j] = field_.add(rrow[j], field_.mul(a, brow[j]));
      }
    return r;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  static Matrix vstack(const F& field, const std::vector<Matrix>& parts, std::size_t cols) {
    std::size_t total = 0;
    for (const auto& p : parts) {
      if (p.rows_ > 0 && p.cols_ != cols) throw DimensionError("vstack column mismatch");
      total += p.rows_;
    }
    Matrix m(field, total, cols);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
      if (p.rows_ == 0) continue;
      m.set_block(r0, 0, p);
      r0 += p.rows_;
    }
    return m;
  }
  static Matrix hstack(const F& field, const std::vector<Matrix>& parts, std::size_t rows) {
    std::size_t total = 0;
    for (const auto& p : parts) {
      if (p.cols_ > 0 && p.rows_ != rows) throw DimensionError("hstack row mismatch");
      total += p.cols_;
    }
    Matrix m(field, rows, total);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
      if (p.cols_ == 0) continue;
      m.set_block(0, c0, p);
      c0 += p.cols_;
    }
    return m;
  }
  static Matrix block_diagonal(const F& field, const std::vector<Matrix>& parts) {
    std::size_t nr = 0, nc = 0;
    for (const auto& p : parts) {
      nr += p.rows_;
      nc += p.cols_;
    }
    Matrix m(field, nr, nc);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      m.set_block(r0, c0, p);
      r0 += p.rows_;
      c0 += p.cols_;
    }
    return m;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }
  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      s += "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += " ";
        s += field_.to_string(at(r, c));
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("shape mismatch " + shape() + " vs " + o.shape());
  }

  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <ExactField F>
struct RrefResult {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <ExactField F>
RrefResult<F> rref(const Matrix<F>& m) {
  const F& f = m.field();
  RrefResult<F> res{m, 0, {}};
  Matrix<F>& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && f.is_zero(a.at(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    auto inv = f.inv(a.at(r, c));
    if (!f.is_one(inv))
      for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      auto factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!f.is_zero(a.at(r, j))) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// some x with x * a = b (b a single row); free variables set to zero
template <ExactField F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (b.rows() != 1 || b.cols() != a.cols())
    throw DimensionError("solve: right-hand side " + b.shape() + " against " + a.shape());
  const F& f = a.field();
  Matrix<F> aug = Matrix<F>::hstack(f, {a.transpose(), b.transpose()}, a.cols());
  auto rr = rref(aug);
  Matrix<F> x(f, 1, a.rows());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    std::size_t c = rr.pivots[i];
    if (c == a.rows()) return std::nullopt;
    x[c] = rr.reduced.at(i, a.rows());
  }
  return x;
}

// solves X * a = b for a matrix b, row by row
template <ExactField F>
std::optional<Matrix<F>> solve_rows(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> x(a.field(), b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    auto s = solve(a, b.row(r));
    if (!s) return std::nullopt;
    x.set_row(r, *s);
  }
  return x;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const F& f = m.field();
  std::size_t n = m.rows();
  auto rr = rref(Matrix<F>::hstack(f, {m, Matrix<F>::identity(f, n)}, n));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

}  // namespace raddeg
