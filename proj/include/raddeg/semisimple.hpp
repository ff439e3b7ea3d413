#pragma once

#include <optional>
#include <vector>

#include "raddeg/algebra.hpp"

namespace raddeg {

template <ExactField F>
struct IdempotentSet {
  std::vector<Matrix<F>> elements;
};

// B = A/J together with the maps relating it to A
template <ExactField F>
struct SemisimpleQuotient {
  Algebra<F> algebra;
  QuotientSpace<F> quotient;  // A modulo J; coordinates() gives B coordinates
  Matrix<F> section;          // row i lifts B's basis element i to A
};

template <ExactField F>
SemisimpleQuotient<F> semisimple_quotient(const Algebra<F>& a, const SubspaceBasis<F>& radical);

// A nontrivial idempotent of the corner eBe of a semisimple algebra B, or
// nullopt when the corner is certified to be a division algebra. Throws
// AlgebraError when neither can be established (only possible over Q).
template <ExactField F>
std::optional<Matrix<F>> split_corner(const Algebra<F>& b, const Matrix<F>& e);

// complete set of orthogonal primitive idempotents of a semisimple algebra
template <ExactField F>
std::vector<Matrix<F>> split_semisimple(const Algebra<F>& b);

// y with y^2 - y nilpotent -> the idempotent it converges to under y -> 3y^2 - 2y^3
template <ExactField F>
Matrix<F> lift_idempotent(const Algebra<F>& a, Matrix<F> y);

template <ExactField F>
IdempotentSet<F> primitive_idempotents(const Algebra<F>& a);

// nonzero with A/J a division algebra
template <ExactField F>
bool is_local(const Algebra<F>& a);

}  // namespace raddeg
