#pragma once

#include <algorithm>

#include "raddeg/matrix.hpp"

namespace raddeg {

// Subspace of F^n held as the nonzero rows of a reduced echelon matrix, so
// equal subspaces have equal representations.
template <ExactField F>
class SubspaceBasis {
 public:
  using Elem = typename F::Elem;

  SubspaceBasis() = default;
  SubspaceBasis(const F& field, std::size_t ambient) : basis_(field, 0, ambient), ambient_(ambient) {}

  static SubspaceBasis span(const Matrix<F>& rows) {
    SubspaceBasis s(rows.field(), rows.cols());
    auto rr = rref(rows);
    s.basis_ = rr.reduced.rows_range(0, rr.rank);
    s.pivots_ = rr.pivots;
    return s;
  }
  static SubspaceBasis full(const F& field, std::size_t n) { return span(Matrix<F>::identity(field, n)); }

  const F& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix<F> vector(std::size_t i) const { return basis_.row(i); }

  // v minus its component along the subspace: zero at every pivot column
  Matrix<F> reduce(const Matrix<F>& v) const {
    check(v);
    Matrix<F> r = v.flattened();
    const F& f = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      auto c = r[pivots_[i]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!f.is_zero(basis_.at(i, j))) r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    return r;
  }
  bool contains(const Matrix<F>& v) const { return reduce(v).is_zero(); }
  bool contains(const SubspaceBasis& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }
  // coordinates of a member of the subspace: its entries at the pivots
  Matrix<F> coordinates(const Matrix<F>& v) const {
    check(v);
    Matrix<F> c(field(), 1, dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  Matrix<F> combine(const Matrix<F>& coords) const { return coords * basis_; }

  bool operator==(const SubspaceBasis& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  void check(const Matrix<F>& v) const {
    if (v.size() != ambient_) throw DimensionError("vector of length " + std::to_string(v.size()) +
                                                   " against ambient " + std::to_string(ambient_));
  }

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

// {v : v * m = 0}
template <ExactField F>
SubspaceBasis<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto rr = rref(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Matrix<F>> vecs;
  for (std::size_t free = 0; free < m.rows(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<F> v(f, 1, m.rows());
    v[free] = f.one();
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.reduced.at(i, free));
    vecs.push_back(v);
  }
  return SubspaceBasis<F>::span(Matrix<F>::vstack(f, vecs, m.rows()));
}

template <ExactField F>
SubspaceBasis<F> subspace_sum(const SubspaceBasis<F>& u, const SubspaceBasis<F>& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("subspace_sum: ambient mismatch");
  return SubspaceBasis<F>::span(Matrix<F>::vstack(u.field(), {u.basis(), v.basis()}, u.ambient()));
}

template <ExactField F>
SubspaceBasis<F> subspace_intersect(const SubspaceBasis<F>& u, const SubspaceBasis<F>& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("subspace_intersect: ambient mismatch");
  const F& f = u.field();
  if (u.dim() == 0 || v.dim() == 0) return SubspaceBasis<F>(f, u.ambient());
  auto k = kernel_basis(Matrix<F>::vstack(f, {u.basis(), v.basis()}, u.ambient()));
  if (k.dim() == 0) return SubspaceBasis<F>(f, u.ambient());
  Matrix<F> xs = k.basis().block(0, 0, k.dim(), u.dim());
  return SubspaceBasis<F>::span(xs * u.basis());
}

// The quotient W/R for R inside W. Representatives are W reduced modulo R
// and put in echelon form; the class of w has coordinates at their pivots.
template <ExactField F>
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const SubspaceBasis<F>& whole, const SubspaceBasis<F>& sub) : sub_(sub) {
    const F& f = whole.field();
    Matrix<F> red(f, whole.dim(), whole.ambient());
    for (std::size_t i = 0; i < whole.dim(); ++i) red.set_row(i, sub.reduce(whole.vector(i)));
    reps_ = SubspaceBasis<F>::span(red);
  }

  std::size_t dim() const { return reps_.dim(); }
  std::size_t ambient() const { return reps_.ambient(); }
  const SubspaceBasis<F>& sub() const { return sub_; }
  const Matrix<F>& representatives() const { return reps_.basis(); }
  Matrix<F> representative(std::size_t i) const { return reps_.vector(i); }
  // class coordinates of a vector of the whole space
  Matrix<F> coordinates(const Matrix<F>& w) const { return reps_.coordinates(sub_.reduce(w)); }

 private:
  SubspaceBasis<F> sub_;
  SubspaceBasis<F> reps_;
};

}  // namespace raddeg
