#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "raddeg/matrix.hpp"
#include "raddeg/polynomial.hpp"
#include "raddeg/subspace.hpp"

namespace raddeg {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AssociativityViolation : public AlgebraError {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
      : AlgebraError("associativity fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class UnitViolation : public AlgebraError {
 public:
  explicit UnitViolation(std::size_t i)
      : AlgebraError("unit law fails on basis element " + std::to_string(i)), i(i) {}
  std::size_t i;
};

// Finite-dimensional associative unital algebra given by structure constants.
// table row i*dim+j holds the coordinates of b_i b_j.
template <ExactField F>
class Algebra {
 public:
  using Elem = typename F::Elem;
  using Mat = Matrix<F>;

  // validates associativity and the unit
  static Algebra from_structure_constants(const F& field, const Mat& table, const Mat& unit);
  // skips validation (for algebras built from already-checked data)
  static Algebra trusted(const F& field, const Mat& table, const Mat& unit);

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Mat& table() const { return table_; }
  const Mat& unit() const { return unit_; }
  Mat basis_element(std::size_t i) const { return Mat::unit_vector(field_, dim_, i); }
  Mat zero_element() const { return Mat(field_, 1, dim_); }
  Mat product(std::size_t i, std::size_t j) const { return table_.row(i * dim_ + j); }

  Mat multiply(const Mat& x, const Mat& y) const;
  Mat power(const Mat& x, std::uint64_t e) const;
  // v -> v x, as a matrix on coordinate rows (this is the right regular action)
  Mat right_multiplication(const Mat& x) const;
  // v -> x v
  Mat left_multiplication(const Mat& x) const;
  bool is_commutative() const;

  // A faithful matrix representation b_i -> rep[i] with rep(xy) = rep(x) rep(y).
  // Defaults to the right regular representation.
  const std::vector<Mat>& representation() const;
  Algebra with_representation(std::vector<Mat> rep) const;

  Algebra opposite() const;
  // minimal generating set (indices into the basis), idempotent basis elements first
  const std::vector<std::size_t>& generators() const;

  // Jacobson radical, computed once
  const SubspaceBasis<F>& radical() const;

  bool same_table(const Algebra& o) const { return dim_ == o.dim_ && table_ == o.table_ && unit_ == o.unit_; }

 private:
  Algebra() = default;
  void validate() const;

  F field_{};
  std::size_t dim_ = 0;
  Mat table_;
  Mat unit_;
  struct Lazy {
    std::once_flag once;
    std::vector<std::size_t> gens;
    std::once_flag rad_once;
    SubspaceBasis<F> rad;
  };

  std::shared_ptr<const std::vector<Mat>> rep_;  // explicit representation, if any
  std::shared_ptr<const std::vector<Mat>> regular_;
  std::shared_ptr<Lazy> lazy_;
};

template <ExactField F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <ExactField F>
SubspaceBasis<F> jacobson_radical(const Algebra<F>& a);
template <>
SubspaceBasis<FiniteField> jacobson_radical(const Algebra<FiniteField>& a);
template <>
SubspaceBasis<Rationals> jacobson_radical(const Algebra<Rationals>& a);

// minimal polynomial of x inside the subalgebra with identity `unit`
template <ExactField F>
Poly<F> minimal_polynomial(const Algebra<F>& a, const Matrix<F>& x, const Matrix<F>& unit);

template <ExactField F>
Matrix<F> evaluate_at(const Algebra<F>& a, const Poly<F>& p, const Matrix<F>& x, const Matrix<F>& unit);

}  // namespace raddeg
