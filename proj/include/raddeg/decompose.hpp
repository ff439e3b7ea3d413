#pragma once

#include <optional>
#include <vector>

#include "raddeg/module.hpp"
#include "raddeg/semisimple.hpp"

namespace raddeg {

class NotIndecomposable : public ModuleError {
 public:
  using ModuleError::ModuleError;
};

template <ExactField F>
struct EndoAlgebra {
  HomBasis<F> hom;
  AlgebraPtr<F> algebra;  // basis = hom basis, product = compose (apply left factor first)
};

template <ExactField F>
EndoAlgebra<F> endo_algebra(const ModulePtr<F>& x);

template <ExactField F>
struct ResidueDivisionAlgebra {
  std::size_t dim = 0;            // over the base field
  EndoAlgebra<F> end;
  SubspaceBasis<F> radical;       // J(End) in End coordinates
  Matrix<F> basis;                // representatives of a basis of End/J, End coordinates
};

template <ExactField F>
ResidueDivisionAlgebra<F> residue_division_algebra(const ModulePtr<F>& x);

template <ExactField F>
bool is_indecomposable(const ModulePtr<F>& x);

template <ExactField F>
struct Summand {
  ModulePtr<F> module;
  std::size_t multiplicity = 0;
  std::vector<Morphism<F>> inclusions;   // module -> x
  std::vector<Morphism<F>> projections;  // x -> module
};

template <ExactField F>
std::vector<Summand<F>> decompose(const ModulePtr<F>& x);

// an isomorphism x -> y; x must be indecomposable
template <ExactField F>
std::optional<Morphism<F>> find_isomorphism(const ModulePtr<F>& x, const ModulePtr<F>& y);

template <ExactField F>
bool are_isomorphic(const ModulePtr<F>& x, const ModulePtr<F>& y);

template <ExactField F>
struct StandardModules {
  AlgebraPtr<F> opposite;
  std::vector<Matrix<F>> idempotents;
  std::vector<ModulePtr<F>> projectives;  // e_i A
  std::vector<ModulePtr<F>> simples;      // top of e_i A
  std::vector<ModulePtr<F>> injectives;   // D(e_i A^op)
};

// idempotents default to primitive_idempotents(A); isomorphic repeats are dropped
template <ExactField F>
StandardModules<F> standard_modules(const AlgebraPtr<F>& a, std::vector<Matrix<F>> idempotents = {});

template <ExactField F>
std::vector<ModulePtr<F>> projective_indecomposables(const AlgebraPtr<F>& a) {
  return standard_modules(a).projectives;
}
template <ExactField F>
std::vector<ModulePtr<F>> injective_indecomposables(const AlgebraPtr<F>& a) {
  return standard_modules(a).injectives;
}
template <ExactField F>
std::vector<ModulePtr<F>> simple_modules(const AlgebraPtr<F>& a) {
  return standard_modules(a).simples;
}

template <ExactField F>
bool is_simple(const ModulePtr<F>& x);
template <ExactField F>
bool is_projective(const ModulePtr<F>& x, const StandardModules<F>& std_modules);
template <ExactField F>
bool is_injective(const ModulePtr<F>& x, const StandardModules<F>& std_modules);
template <ExactField F>
bool is_projective(const ModulePtr<F>& x) {
  return is_projective(x, standard_modules(x->algebra_ptr()));
}
template <ExactField F>
bool is_injective(const ModulePtr<F>& x) {
  return is_injective(x, standard_modules(x->algebra_ptr()));
}

}  // namespace raddeg
