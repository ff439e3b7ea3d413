#include "raddeg/decompose.hpp"

#include <algorithm>

namespace raddeg {

template <ExactField F>
EndoAlgebra<F> endo_algebra(const ModulePtr<F>& x) {
  const F& f = x->field();
  auto hom = hom_basis(x, x);
  const std::size_t h = hom.size();
  std::vector<Matrix<F>> mats;
  for (std::size_t i = 0; i < h; ++i) mats.push_back(hom.morphism(i).matrix);
  Matrix<F> table(f, h * h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) table.set_row(i * h + j, hom.coordinates(mats[i] * mats[j]));
  Matrix<F> unit = h ? hom.coordinates(Matrix<F>::identity(f, x->dim())) : Matrix<F>(f, 1, 0);
  auto alg = Algebra<F>::trusted(f, table, unit).with_representation(mats);
  return {hom, std::make_shared<const Algebra<F>>(std::move(alg))};
}

template <ExactField F>
ResidueDivisionAlgebra<F> residue_division_algebra(const ModulePtr<F>& x) {
  if (x->dim() == 0) throw NotIndecomposable("the zero module is not indecomposable");
  ResidueDivisionAlgebra<F> r;
  r.end = endo_algebra(x);
  r.radical = r.end.algebra->radical();
  auto sq = semisimple_quotient(*r.end.algebra, r.radical);
  if (split_corner(sq.algebra, sq.algebra.unit())) throw NotIndecomposable("endomorphism algebra is not local");
  r.dim = sq.algebra.dim();
  r.basis = sq.section;
  return r;
}

template <ExactField F>
bool is_indecomposable(const ModulePtr<F>& x) {
  if (x->dim() == 0) return false;
  auto e = endo_algebra(x);
  return is_local(*e.algebra);
}

template <ExactField F>
std::optional<Morphism<F>> find_isomorphism(const ModulePtr<F>& x, const ModulePtr<F>& y) {
  if (x->dim() != y->dim() || !same_algebra(x->algebra(), y->algebra())) return std::nullopt;
  if (x->dim() == 0) return zero_morphism(x, y);
  auto h1 = hom_basis(x, y);
  if (h1.size() == 0) return std::nullopt;
  auto h2 = hom_basis(y, x);
  // End(x) local: some u v is invertible iff some basis pair gives one
  for (std::size_t i = 0; i < h1.size(); ++i) {
    auto u = h1.morphism(i);
    if (is_isomorphism(u)) return u;
    for (std::size_t j = 0; j < h2.size(); ++j)
      if (is_isomorphism(compose(u, h2.morphism(j)))) return u;
  }
  return std::nullopt;
}

template <ExactField F>
std::vector<Summand<F>> decompose(const ModulePtr<F>& x) {
  std::vector<Summand<F>> out;
  if (x->dim() == 0) return out;
  auto end = endo_algebra(x);
  auto idem = primitive_idempotents(*end.algebra);
  for (const auto& e : idem.elements) {
    auto emat = end.hom.element(e);
    auto im = image(emat);
    Morphism<F> incl = im.inclusion, proj = im.onto;
    bool placed = false;
    for (auto& s : out) {
      auto iso = find_isomorphism(im.module, s.module);
      if (!iso) continue;
      auto inv = inverse(iso->matrix);
      Morphism<F> back{s.module, im.module, *inv};
      s.inclusions.push_back(compose(back, incl));
      s.projections.push_back(compose(proj, *iso));
      ++s.multiplicity;
      placed = true;
      break;
    }
    if (!placed) out.push_back({im.module, 1, {incl}, {proj}});
  }
  return out;
}

template <ExactField F>
bool are_isomorphic(const ModulePtr<F>& x, const ModulePtr<F>& y) {
  if (x->dim() != y->dim()) return false;
  auto dx = decompose(x), dy = decompose(y);
  if (dx.size() != dy.size()) return false;
  std::vector<bool> used(dy.size(), false);
  for (const auto& s : dx) {
    bool found = false;
    for (std::size_t j = 0; j < dy.size() && !found; ++j) {
      if (used[j] || dy[j].multiplicity != s.multiplicity) continue;
      if (find_isomorphism(s.module, dy[j].module)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

template <ExactField F>
StandardModules<F> standard_modules(const AlgebraPtr<F>& a, std::vector<Matrix<F>> idempotents) {
  StandardModules<F> s;
  s.opposite = std::make_shared<const Algebra<F>>(a->opposite());
  if (idempotents.empty()) idempotents = primitive_idempotents(*a).elements;
  auto reg = regular_module(a);
  auto reg_op = regular_module(s.opposite);
  for (const auto& e : idempotents) {
    auto p = submodule(reg, a->left_multiplication(e)).module;
    bool repeat = false;
    for (const auto& q : s.projectives) repeat = repeat || find_isomorphism(p, q).has_value();
    if (repeat) continue;
    s.idempotents.push_back(e);
    s.projectives.push_back(p);
    s.simples.push_back(module_top(p).module);
    // e A^op is spanned by the products b e in A
    auto pop = submodule(reg_op, a->right_multiplication(e)).module;
    s.injectives.push_back(dual_module(pop, a));
  }
  return s;
}

template <ExactField F>
bool is_simple(const ModulePtr<F>& x) {
  if (x->dim() == 0) return false;
  if (module_radical(x).module->dim() != 0) return false;
  return is_indecomposable(x);
}

namespace {

template <ExactField F>
bool all_summands_in(const ModulePtr<F>& x, const std::vector<ModulePtr<F>>& list) {
  for (const auto& s : decompose(x)) {
    bool ok = false;
    for (const auto& p : list) ok = ok || find_isomorphism(s.module, p).has_value();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

template <ExactField F>
bool is_projective(const ModulePtr<F>& x, const StandardModules<F>& sm) {
  return all_summands_in(x, sm.projectives);
}

template <ExactField F>
bool is_injective(const ModulePtr<F>& x, const StandardModules<F>& sm) {
  return all_summands_in(x, sm.injectives);
}

#define RADDEG_INSTANTIATE(F)                                                                    \
  template EndoAlgebra<F> endo_algebra(const ModulePtr<F>&);                                     \
  template ResidueDivisionAlgebra<F> residue_division_algebra(const ModulePtr<F>&);              \
  template bool is_indecomposable(const ModulePtr<F>&);                                          \
  template std::optional<Morphism<F>> find_isomorphism(const ModulePtr<F>&, const ModulePtr<F>&); \
  template std::vector<Summand<F>> decompose(const ModulePtr<F>&);                               \
  template bool are_isomorphic(const ModulePtr<F>&, const ModulePtr<F>&);                        \
  template StandardModules<F> standard_modules(const AlgebraPtr<F>&, std::vector<Matrix<F>>);    \
  template bool is_simple(const ModulePtr<F>&);                                                  \
  template bool is_projective(const ModulePtr<F>&, const StandardModules<F>&);                   \
  template bool is_injective(const ModulePtr<F>&, const StandardModules<F>&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
