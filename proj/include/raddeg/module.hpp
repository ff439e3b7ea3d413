#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "raddeg/algebra.hpp"
#include "raddeg/path_algebra.hpp"

namespace raddeg {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <ExactField F>
class Module;
template <ExactField F>
using ModulePtr = std::shared_ptr<const Module<F>>;

// Right module: v . b = v * action(b) in coordinates.
template <ExactField F>
class Module {
 public:
  using Mat = Matrix<F>;

  // checks the unit and the multiplication table
  static ModulePtr<F> create(AlgebraPtr<F> algebra, std::vector<Mat> action);
  static ModulePtr<F> trusted(AlgebraPtr<F> algebra, std::vector<Mat> action, std::size_t dim);
  static ModulePtr<F> zero(AlgebraPtr<F> algebra);

  const Algebra<F>& algebra() const { return *algebra_; }
  const AlgebraPtr<F>& algebra_ptr() const { return algebra_; }
  const F& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t i) const { return action_[i]; }
  const std::vector<Mat>& actions() const { return action_; }
  // matrix of v -> v.x for an algebra element x in coordinates
  Mat action_of(const Mat& x) const;

  bool same_structure(const Module& o) const;

 private:
  AlgebraPtr<F> algebra_;
  std::vector<Mat> action_;
  std::size_t dim_ = 0;
};

template <ExactField F>
bool same_algebra(const Algebra<F>& a, const Algebra<F>& b) {
  return &a == &b || a.same_table(b);
}

template <ExactField F>
struct Morphism {
  ModulePtr<F> source;
  ModulePtr<F> target;
  Matrix<F> matrix;  // dim(source) x dim(target)

  bool is_zero() const { return matrix.is_zero(); }
};

template <ExactField F>
Morphism<F> make_morphism(ModulePtr<F> source, ModulePtr<F> target, Matrix<F> matrix);  // validated
template <ExactField F>
Morphism<F> identity_morphism(ModulePtr<F> m);
template <ExactField F>
Morphism<F> zero_morphism(ModulePtr<F> source, ModulePtr<F> target);
// apply g, then f
template <ExactField F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f);
template <ExactField F>
Morphism<F> operator+(const Morphism<F>& a, const Morphism<F>& b);
template <ExactField F>
Morphism<F> scaled(const Morphism<F>& a, const typename F::Elem& s);
template <ExactField F>
bool intertwines(const Module<F>& x, const Module<F>& y, const Matrix<F>& m);

template <ExactField F>
bool is_mono(const Morphism<F>& f);
template <ExactField F>
bool is_epi(const Morphism<F>& f);
template <ExactField F>
bool is_isomorphism(const Morphism<F>& f);
template <ExactField F>
bool is_split_mono(const Morphism<F>& f);
template <ExactField F>
bool is_split_epi(const Morphism<F>& f);

// Hom space with its basis kept in reduced echelon form over the flattened
// matrices; the coordinates of a morphism are its entries at the pivots.
template <ExactField F>
class HomBasis {
 public:
  HomBasis() = default;
  HomBasis(ModulePtr<F> source, ModulePtr<F> target, SubspaceBasis<F> space)
      : source_(std::move(source)), target_(std::move(target)), space_(std::move(space)) {}

  const ModulePtr<F>& source() const { return source_; }
  const ModulePtr<F>& target() const { return target_; }
  std::size_t size() const { return space_.dim(); }
  const SubspaceBasis<F>& space() const { return space_; }
  Morphism<F> morphism(std::size_t k) const;
  std::vector<Morphism<F>> morphisms() const;
  Matrix<F> coordinates(const Matrix<F>& m) const { return space_.coordinates(m.flattened()); }
  Matrix<F> coordinates(const Morphism<F>& f) const { return coordinates(f.matrix); }
  Morphism<F> element(const Matrix<F>& coords) const;

 private:
  ModulePtr<F> source_, target_;
  SubspaceBasis<F> space_;
};

template <ExactField F>
HomBasis<F> hom_basis(const ModulePtr<F>& x, const ModulePtr<F>& y);

template <ExactField F>
struct Submodule {
  ModulePtr<F> module;
  Morphism<F> inclusion;
};

template <ExactField F>
struct QuotientModule {
  ModulePtr<F> module;
  Morphism<F> projection;
};

template <ExactField F>
struct ImageFactorization {
  ModulePtr<F> module;
  Morphism<F> onto;       // source -> image
  Morphism<F> inclusion;  // image -> target
};

// rows of `basis` must span an invariant subspace of m
template <ExactField F>
Submodule<F> submodule(const ModulePtr<F>& m, const Matrix<F>& basis);
template <ExactField F>
QuotientModule<F> quotient_module(const ModulePtr<F>& m, const Matrix<F>& basis);
template <ExactField F>
Submodule<F> kernel(const Morphism<F>& f);
template <ExactField F>
QuotientModule<F> cokernel(const Morphism<F>& f);
template <ExactField F>
ImageFactorization<F> image(const Morphism<F>& f);

template <ExactField F>
struct DirectSum {
  ModulePtr<F> module;
  std::vector<Morphism<F>> injections;
  std::vector<Morphism<F>> projections;
};

template <ExactField F>
DirectSum<F> direct_sum(const AlgebraPtr<F>& algebra, const std::vector<ModulePtr<F>>& parts);

// M J and M / M J
template <ExactField F>
Submodule<F> module_radical(const ModulePtr<F>& m);
template <ExactField F>
QuotientModule<F> module_top(const ModulePtr<F>& m);
// {v : v J = 0}
template <ExactField F>
Submodule<F> module_socle(const ModulePtr<F>& m);

template <ExactField F>
ModulePtr<F> regular_module(const AlgebraPtr<F>& a);
// Hom_k(M, k) as a right module over `opposite` (which must be the opposite of M's algebra)
template <ExactField F>
ModulePtr<F> dual_module(const ModulePtr<F>& m, const AlgebraPtr<F>& opposite);
template <ExactField F>
Morphism<F> dual_morphism(const Morphism<F>& f, const ModulePtr<F>& dual_target, const ModulePtr<F>& dual_source);

// quiver representation: a vector space per vertex, a matrix per arrow (v -> v * M_a)
template <ExactField F>
ModulePtr<F> representation_module(const PathAlgebra<F>& pa, const std::vector<std::size_t>& dims,
                                   const std::vector<Matrix<F>>& arrow_maps);
// dimension of M e_v for each vertex
template <ExactField F>
std::vector<std::size_t> dimension_vector(const PathAlgebra<F>& pa, const Module<F>& m);

}  // namespace raddeg
