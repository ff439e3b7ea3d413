#include "raddeg/module.hpp"

namespace raddeg {

template <ExactField F>
ModulePtr<F> Module<F>::trusted(AlgebraPtr<F> algebra, std::vector<Mat> action, std::size_t dim) {
  auto m = std::make_shared<Module<F>>();
  m->algebra_ = std::move(algebra);
  m->action_ = std::move(action);
  m->dim_ = dim;
  if (m->action_.empty() && m->algebra_->dim() > 0)
    for (std::size_t i = 0; i < m->algebra_->dim(); ++i) m->action_.push_back(Mat(m->algebra_->field(), dim, dim));
  return m;
}

template <ExactField F>
ModulePtr<F> Module<F>::zero(AlgebraPtr<F> algebra) {
  return trusted(std::move(algebra), {}, 0);
}

template <ExactField F>
ModulePtr<F> Module<F>::create(AlgebraPtr<F> algebra, std::vector<Mat> action) {
  const auto& a = *algebra;
  if (action.size() != a.dim())
    throw ModuleError("module needs " + std::to_string(a.dim()) + " action matrices, got " +
                      std::to_string(action.size()));
  std::size_t d = action.empty() ? 0 : action[0].rows();
  for (const auto& m : action)
    if (m.rows() != d || m.cols() != d) throw ModuleError("action matrices must all be square of one size");
  auto mod = trusted(algebra, std::move(action), d);
  const F& f = a.field();
  if (!(mod->action_of(a.unit()) == Mat::identity(f, d))) throw ModuleError("the unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(mod->action(i) * mod->action(j) == mod->action_of(a.product(i, j))))
        throw ModuleError("action violates the product of basis elements " + std::to_string(i) + " and " +
                          std::to_string(j));
  return mod;
}

template <ExactField F>
Matrix<F> Module<F>::action_of(const Mat& x) const {
  const F& f = field();
  Mat r(f, dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) r.add_scaled(action_[i], x[i]);
  return r;
}

template <ExactField F>
bool Module<F>::same_structure(const Module& o) const {
  if (this == &o) return true;
  if (dim_ != o.dim_ || !same_algebra(*algebra_, *o.algebra_)) return false;
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (!(action_[i] == o.action_[i])) return false;
  return true;
}

template <ExactField F>
bool intertwines(const Module<F>& x, const Module<F>& y, const Matrix<F>& m) {
  if (m.rows() != x.dim() || m.cols() != y.dim()) return false;
  for (auto g : x.algebra().generators())
    if (!(x.action(g) * m == m * y.action(g))) return false;
  return true;
}

namespace {

template <ExactField F>
void check_endpoint(const ModulePtr<F>& a, const ModulePtr<F>& b, const char* what) {
  if (a != b && !a->same_structure(*b)) throw ModuleError(std::string(what) + ": endpoint mismatch");
}

}  // namespace

template <ExactField F>
Morphism<F> make_morphism(ModulePtr<F> source, ModulePtr<F> target, Matrix<F> matrix) {
  if (!same_algebra(source->algebra(), target->algebra())) throw ModuleError("morphism between different algebras");
  if (matrix.rows() != source->dim() || matrix.cols() != target->dim())
    throw ModuleError("morphism matrix " + matrix.shape() + " does not fit " + std::to_string(source->dim()) + "x" +
                      std::to_string(target->dim()));
  if (!intertwines(*source, *target, matrix)) throw ModuleError("matrix does not intertwine the actions");
  return {std::move(source), std::move(target), std::move(matrix)};
}

template <ExactField F>
Morphism<F> identity_morphism(ModulePtr<F> m) {
  auto id = Matrix<F>::identity(m->field(), m->dim());
  return {m, m, id};
}

template <ExactField F>
Morphism<F> zero_morphism(ModulePtr<F> source, ModulePtr<F> target) {
  Matrix<F> z(source->field(), source->dim(), target->dim());
  return {std::move(source), std::move(target), std::move(z)};
}

template <ExactField F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
  check_endpoint(g.target, f.source, "compose");
  return {g.source, f.target, g.matrix * f.matrix};
}

template <ExactField F>
Morphism<F> operator+(const Morphism<F>& a, const Morphism<F>& b) {
  check_endpoint(a.source, b.source, "sum");
  check_endpoint(a.target, b.target, "sum");
  return {a.source, a.target, a.matrix + b.matrix};
}

template <ExactField F>
Morphism<F> scaled(const Morphism<F>& a, const typename F::Elem& s) {
  return {a.source, a.target, a.matrix.scaled(s)};
}

template <ExactField F>
bool is_mono(const Morphism<F>& f) {
  return rank(f.matrix) == f.source->dim();
}
template <ExactField F>
bool is_epi(const Morphism<F>& f) {
  return rank(f.matrix) == f.target->dim();
}
template <ExactField F>
bool is_isomorphism(const Morphism<F>& f) {
  return f.source->dim() == f.target->dim() && is_mono(f);
}

template <ExactField F>
bool is_split_epi(const Morphism<F>& f) {
  // a retraction: some s with s f = id
  if (!is_epi(f)) return false;
  auto h = hom_basis(f.target, f.source);
  const F& fld = f.matrix.field();
  std::size_t n = f.target->dim();
  Matrix<F> sys(fld, h.size(), n * n);
  for (std::size_t k = 0; k < h.size(); ++k) sys.set_row(k, (h.morphism(k).matrix * f.matrix).flattened());
  return solve(sys, Matrix<F>::identity(fld, n).flattened()).has_value();
}

template <ExactField F>
bool is_split_mono(const Morphism<F>& f) {
  if (!is_mono(f)) return false;
  auto h = hom_basis(f.target, f.source);
  const F& fld = f.matrix.field();
  std::size_t n = f.source->dim();
  Matrix<F> sys(fld, h.size(), n * n);
  for (std::size_t k = 0; k < h.size(); ++k) sys.set_row(k, (f.matrix * h.morphism(k).matrix).flattened());
  return solve(sys, Matrix<F>::identity(fld, n).flattened()).has_value();
}

template <ExactField F>
Morphism<F> HomBasis<F>::morphism(std::size_t k) const {
  return {source_, target_, space_.vector(k).reshaped(source_->dim(), target_->dim())};
}

template <ExactField F>
std::vector<Morphism<F>> HomBasis<F>::morphisms() const {
  std::vector<Morphism<F>> out;
  for (std::size_t k = 0; k < size(); ++k) out.push_back(morphism(k));
  return out;
}

template <ExactField F>
Morphism<F> HomBasis<F>::element(const Matrix<F>& coords) const {
  Matrix<F> flat = space_.combine(coords.flattened());
  return {source_, target_, flat.reshaped(source_->dim(), target_->dim())};
}

template <ExactField F>
HomBasis<F> hom_basis(const ModulePtr<F>& x, const ModulePtr<F>& y) {
  if (!same_algebra(x->algebra(), y->algebra())) throw ModuleError("hom_basis: modules over different algebras");
  const F& f = x->field();
  const std::size_t dx = x->dim(), dy = y->dim(), n = dx * dy;
  Matrix<F> cur = Matrix<F>::identity(f, n);
  for (auto g : x->algebra().generators()) {
    if (cur.rows() == 0) break;
    const auto& ax = x->action(g);
    const auto& ay = y->action(g);
    Matrix<F> images(f, cur.rows(), n);
    for (std::size_t r = 0; r < cur.rows(); ++r) {
      Matrix<F> phi = cur.row(r).reshaped(dx, dy);
      images.set_row(r, (ax * phi - phi * ay).flattened());
    }
    auto ker = kernel_basis(images);
    cur = ker.basis() * cur;
  }
  return HomBasis<F>(x, y, SubspaceBasis<F>::span(cur));
}

template <ExactField F>
Submodule<F> submodule(const ModulePtr<F>& m, const Matrix<F>& basis) {
  const F& f = m->field();
  auto sub = SubspaceBasis<F>::span(basis.cols() == m->dim() ? basis : Matrix<F>(f, 0, m->dim()));
  std::vector<Matrix<F>> act;
  for (const auto& a : m->actions()) {
    Matrix<F> ra(f, sub.dim(), sub.dim());
    for (std::size_t i = 0; i < sub.dim(); ++i) {
      Matrix<F> img = sub.vector(i) * a;
      if (!sub.contains(img)) throw ModuleError("subspace is not a submodule");
      ra.set_row(i, sub.coordinates(img));
    }
    act.push_back(ra);
  }
  auto mod = Module<F>::trusted(m->algebra_ptr(), std::move(act), sub.dim());
  return {mod, Morphism<F>{mod, m, sub.basis()}};
}

template <ExactField F>
QuotientModule<F> quotient_module(const ModulePtr<F>& m, const Matrix<F>& basis) {
  const F& f = m->field();
  auto sub = SubspaceBasis<F>::span(basis.cols() == m->dim() ? basis : Matrix<F>(f, 0, m->dim()));
  QuotientSpace<F> q(SubspaceBasis<F>::full(f, m->dim()), sub);
  std::vector<Matrix<F>> act;
  for (const auto& a : m->actions()) {
    Matrix<F> ra(f, q.dim(), q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) ra.set_row(i, q.coordinates(q.representative(i) * a));
    act.push_back(ra);
  }
  auto mod = Module<F>::trusted(m->algebra_ptr(), std::move(act), q.dim());
  Matrix<F> proj(f, m->dim(), q.dim());
  for (std::size_t j = 0; j < m->dim(); ++j) proj.set_row(j, q.coordinates(Matrix<F>::unit_vector(f, m->dim(), j)));
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (const auto& a : m->actions())
      if (!sub.contains(sub.vector(i) * a)) throw ModuleError("quotient by a non-submodule");
  return {mod, Morphism<F>{m, mod, proj}};
}

template <ExactField F>
Submodule<F> kernel(const Morphism<F>& f) {
  return submodule(f.source, kernel_basis(f.matrix).basis());
}

template <ExactField F>
QuotientModule<F> cokernel(const Morphism<F>& f) {
  return quotient_module(f.target, f.matrix);
}

template <ExactField F>
ImageFactorization<F> image(const Morphism<F>& f) {
  auto sub = submodule(f.target, f.matrix);
  auto space = SubspaceBasis<F>::span(f.matrix);
  Matrix<F> onto(f.matrix.field(), f.source->dim(), space.dim());
  for (std::size_t r = 0; r < f.source->dim(); ++r) onto.set_row(r, space.coordinates(f.matrix.row(r)));
  return {sub.module, Morphism<F>{f.source, sub.module, onto}, sub.inclusion};
}

template <ExactField F>
DirectSum<F> direct_sum(const AlgebraPtr<F>& algebra, const std::vector<ModulePtr<F>>& parts) {
  const F& f = algebra->field();
  std::size_t total = 0;
  for (const auto& p : parts) total += p->dim();
  std::vector<Matrix<F>> act;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    std::vector<Matrix<F>> blocks;
    for (const auto& p : parts) blocks.push_back(p->action(i));
    act.push_back(Matrix<F>::block_diagonal(f, blocks));
  }
  DirectSum<F> out;
  out.module = Module<F>::trusted(algebra, std::move(act), total);
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix<F> inj(f, p->dim(), total), proj(f, total, p->dim());
    for (std::size_t i = 0; i < p->dim(); ++i) {
      inj.at(i, off + i) = f.one();
      proj.at(off + i, i) = f.one();
    }
    out.injections.push_back({p, out.module, inj});
    out.projections.push_back({out.module, p, proj});
    off += p->dim();
  }
  return out;
}

template <ExactField F>
Submodule<F> module_radical(const ModulePtr<F>& m) {
  const F& f = m->field();
  const auto& J = m->algebra().radical();
  std::vector<Matrix<F>> rows;
  for (std::size_t j = 0; j < J.dim(); ++j) rows.push_back(m->action_of(J.vector(j)));
  return submodule(m, Matrix<F>::vstack(f, rows, m->dim()));
}

template <ExactField F>
QuotientModule<F> module_top(const ModulePtr<F>& m) {
  return quotient_module(m, module_radical(m).inclusion.matrix);
}

template <ExactField F>
Submodule<F> module_socle(const ModulePtr<F>& m) {
  const F& f = m->field();
  const auto& J = m->algebra().radical();
  std::vector<Matrix<F>> cols;
  for (std::size_t j = 0; j < J.dim(); ++j) cols.push_back(m->action_of(J.vector(j)));
  if (cols.empty()) return submodule(m, Matrix<F>::identity(f, m->dim()));
  return submodule(m, kernel_basis(Matrix<F>::hstack(f, cols, m->dim())).basis());
}

template <ExactField F>
ModulePtr<F> regular_module(const AlgebraPtr<F>& a) {
  std::vector<Matrix<F>> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->right_multiplication(a->basis_element(i)));
  return Module<F>::trusted(a, std::move(act), a->dim());
}

template <ExactField F>
ModulePtr<F> dual_module(const ModulePtr<F>& m, const AlgebraPtr<F>& opposite) {
  if (opposite->dim() != m->algebra().dim()) throw ModuleError("dual_module: algebra dimension mismatch");
  std::vector<Matrix<F>> act;
  for (const auto& a : m->actions()) act.push_back(a.transpose());
  return Module<F>::trusted(opposite, std::move(act), m->dim());
}

template <ExactField F>
Morphism<F> dual_morphism(const Morphism<F>& f, const ModulePtr<F>& dual_target, const ModulePtr<F>& dual_source) {
  return {dual_target, dual_source, f.matrix.transpose()};
}

template <ExactField F>
ModulePtr<F> representation_module(const PathAlgebra<F>& pa, const std::vector<std::size_t>& dims,
                                   const std::vector<Matrix<F>>& arrow_maps) {
  const auto& q = pa.presentation;
  const F& f = pa.algebra->field();
  if (dims.size() != q.vertices.size()) throw ModuleError("one dimension per vertex expected");
  if (arrow_maps.size() != q.arrows.size()) throw ModuleError("one matrix per arrow expected");
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  const std::size_t total = off.back();
  std::vector<Matrix<F>> vert, arr;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    Matrix<F> e(f, total, total);
    for (std::size_t i = off[v]; i < off[v + 1]; ++i) e.at(i, i) = f.one();
    vert.push_back(e);
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arw = q.arrows[a];
    const auto& m = arrow_maps[a];
    if (m.rows() != dims[arw.source] || m.cols() != dims[arw.target])
      throw ModuleError("matrix for arrow " + arw.name + " has shape " + m.shape());
    Matrix<F> full(f, total, total);
    full.set_block(off[arw.source], off[arw.target], m);
    arr.push_back(full);
  }
  std::vector<Matrix<F>> act;
  for (const auto& p : pa.basis_paths) {
    if (p.arrows.empty()) {
      act.push_back(vert[p.source]);
      continue;
    }
    Matrix<F> r = arr[p.arrows[0]];
    for (std::size_t i = 1; i < p.arrows.size(); ++i) r = r * arr[p.arrows[i]];
    act.push_back(r);
  }
  return Module<F>::create(pa.algebra, std::move(act));
}

template <ExactField F>
std::vector<std::size_t> dimension_vector(const PathAlgebra<F>& pa, const Module<F>& m) {
  std::vector<std::size_t> dv;
  for (auto b : pa.vertex_basis) dv.push_back(rank(m.action(b)));
  return dv;
}

#define RADDEG_INSTANTIATE(F)                                                                           \
  template class Module<F>;                                                                             \
  template class HomBasis<F>;                                                                           \
  template bool intertwines(const Module<F>&, const Module<F>&, const Matrix<F>&);                      \
  template Morphism<F> make_morphism(ModulePtr<F>, ModulePtr<F>, Matrix<F>);                            \
  template Morphism<F> identity_morphism(ModulePtr<F>);                                                 \
  template Morphism<F> zero_morphism(ModulePtr<F>, ModulePtr<F>);                                       \
  template Morphism<F> compose(const Morphism<F>&, const Morphism<F>&);                                 \
  template Morphism<F> operator+(const Morphism<F>&, const Morphism<F>&);                               \
  template Morphism<F> scaled(const Morphism<F>&, const typename F::Elem&);                             \
  template bool is_mono(const Morphism<F>&);                                                            \
  template bool is_epi(const Morphism<F>&);                                                             \
  template bool is_isomorphism(const Morphism<F>&);                                                     \
  template bool is_split_mono(const Morphism<F>&);                                                      \
  template bool is_split_epi(const Morphism<F>&);                                                       \
  template HomBasis<F> hom_basis(const ModulePtr<F>&, const ModulePtr<F>&);                             \
  template Submodule<F> submodule(const ModulePtr<F>&, const Matrix<F>&);                               \
  template QuotientModule<F> quotient_module(const ModulePtr<F>&, const Matrix<F>&);                    \
  template Submodule<F> kernel(const Morphism<F>&);                                                     \
  template QuotientModule<F> cokernel(const Morphism<F>&);                                              \
  template ImageFactorization<F> image(const Morphism<F>&);                                             \
  template DirectSum<F> direct_sum(const AlgebraPtr<F>&, const std::vector<ModulePtr<F>>&);             \
  template Submodule<F> module_radical(const ModulePtr<F>&);                                            \
  template QuotientModule<F> module_top(const ModulePtr<F>&);                                           \
  template Submodule<F> module_socle(const ModulePtr<F>&);                                              \
  template ModulePtr<F> regular_module(const AlgebraPtr<F>&);                                           \
  template ModulePtr<F> dual_module(const ModulePtr<F>&, const AlgebraPtr<F>&);                         \
  template Morphism<F> dual_morphism(const Morphism<F>&, const ModulePtr<F>&, const ModulePtr<F>&);     \
  template ModulePtr<F> representation_module(const PathAlgebra<F>&, const std::vector<std::size_t>&,  \
                                              const std::vector<Matrix<F>>&);                           \
  template std::vector<std::size_t> dimension_vector(const PathAlgebra<F>&, const Module<F>&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
