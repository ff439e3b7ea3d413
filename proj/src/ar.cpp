#include "raddeg/ar.hpp"

#include <set>
#include <sstream>

namespace raddeg {

template <ExactField F>
ProjectiveCover<F> projective_cover(const ModulePtr<F>& m, const StandardModules<F>& sm) {
  const F& f = m->field();
  const auto& a = m->algebra_ptr();
  auto reg = regular_module(a);
  auto top = module_top(m);
  const auto& pi = top.projection.matrix;
  SubspaceBasis<F> got(f, top.module->dim());
  ProjectiveCover<F> out;
  std::vector<ModulePtr<F>> parts;
  std::vector<Matrix<F>> blocks;
  for (std::size_t i = 0; i < sm.idempotents.size() && !got.is_full(); ++i) {
    auto pe = submodule(reg, a->left_multiplication(sm.idempotents[i]));
    const auto& gens = pe.inclusion.matrix;  // rows: A-coordinates of a basis of e_i A
    auto act = m->action_of(sm.idempotents[i]);
    for (std::size_t v = 0; v < m->dim() && !got.is_full(); ++v) {
      Matrix<F> w = Matrix<F>::unit_vector(f, m->dim(), v) * act;
      if (w.is_zero() || got.contains(w * pi)) continue;
      // e_i A -> M, p -> w p
      Matrix<F> block(f, gens.rows(), m->dim());
      for (std::size_t k = 0; k < gens.rows(); ++k) block.set_row(k, w * m->action_of(gens.row(k)));
      got = subspace_sum(got, SubspaceBasis<F>::span(block * pi));
      parts.push_back(pe.module);
      blocks.push_back(block);
      out.summands.push_back(i);
    }
  }
  if (!got.is_full()) throw ModuleError("projective_cover: idempotents do not cover the top");
  auto ds = direct_sum(a, parts);
  out.module = ds.module;
  out.map = {ds.module, m, Matrix<F>::vstack(f, blocks, m->dim())};
  return out;
}

template <ExactField F>
Presentation<F> minimal_projective_presentation(const ModulePtr<F>& m, const StandardModules<F>& sm) {
  Presentation<F> p;
  p.p0 = projective_cover(m, sm);
  p.syzygy = kernel(p.p0.map);
  p.p1 = projective_cover(p.syzygy.module, sm);
  p.map = compose(p.p1.map, p.syzygy.inclusion);
  return p;
}

namespace {

// Hom(P, A_A) as a right module over the opposite algebra: (phi . b)(p) = b phi(p)
template <ExactField F>
std::pair<HomBasis<F>, ModulePtr<F>> hom_into_regular(const ModulePtr<F>& p, const AlgebraPtr<F>& opposite) {
  const auto& a = p->algebra_ptr();
  auto reg = regular_module(a);
  auto hb = hom_basis(p, reg);
  std::vector<Matrix<F>> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Morphism<F> lb{reg, reg, a->left_multiplication(a->basis_element(i))};
    Matrix<F> m(a->field(), hb.size(), hb.size());
    for (std::size_t k = 0; k < hb.size(); ++k) m.set_row(k, hb.coordinates(compose(hb.morphism(k), lb)));
    act.push_back(m);
  }
  return {hb, Module<F>::trusted(opposite, std::move(act), hb.size())};
}

}  // namespace

template <ExactField F>
ModulePtr<F> transpose(const Presentation<F>& pres, const AlgebraPtr<F>& opposite) {
  auto [h0, m0] = hom_into_regular(pres.p0.module, opposite);
  auto [h1, m1] = hom_into_regular(pres.p1.module, opposite);
  Matrix<F> mat(opposite->field(), h0.size(), h1.size());
  for (std::size_t k = 0; k < h0.size(); ++k) mat.set_row(k, h1.coordinates(compose(pres.map, h0.morphism(k))));
  return cokernel(Morphism<F>{m0, m1, mat}).module;
}

template <ExactField F>
ExtSpace<F> ext1(const ModulePtr<F>& m, const ModulePtr<F>& n, const StandardModules<F>& sm) {
  ExtSpace<F> e;
  e.m = m;
  e.n = n;
  e.pres = minimal_projective_presentation(m, sm);
  e.hom = hom_basis(e.pres.syzygy.module, n);
  auto ext = hom_basis(e.pres.p0.module, n);
  const F& f = m->field();
  Matrix<F> rows(f, ext.size(), e.hom.size());
  for (std::size_t k = 0; k < ext.size(); ++k)
    rows.set_row(k, e.hom.coordinates(compose(e.pres.syzygy.inclusion, ext.morphism(k))));
  e.classes = QuotientSpace<F>(SubspaceBasis<F>::full(f, e.hom.size()), SubspaceBasis<F>::span(rows));
  return e;
}

template <ExactField F>
ShortExact<F> extension(const ExtSpace<F>& ext, const Matrix<F>& class_coords) {
  const F& f = ext.m->field();
  const auto& a = ext.m->algebra_ptr();
  auto xi = ext.hom.element(class_coords * ext.classes.representatives());
  const auto& omega = ext.pres.syzygy;
  const auto& p0 = ext.pres.p0;
  // E = (P0 + N) / {(w, -xi(w))}
  auto d = direct_sum(a, {p0.module, ext.n});
  auto rel = Matrix<F>::hstack(f, {omega.inclusion.matrix, -xi.matrix}, omega.module->dim());
  auto q = quotient_module(d.module, rel);
  const std::size_t dn = ext.n->dim(), dm = ext.m->dim(), de = q.module->dim();
  Matrix<F> inj = d.injections[1].matrix * q.projection.matrix;
  auto section = solve_rows(q.projection.matrix, Matrix<F>::identity(f, de));
  if (!section) throw ModuleError("extension: quotient map has no section");
  Matrix<F> down = Matrix<F>::vstack(f, {p0.map.matrix, Matrix<F>(f, dn, dm)}, dm);
  Matrix<F> proj = *section * down;
  // rebase E on (N, lifts of a basis of M) so coordinates concatenate tau M and M
  auto lifts = solve_rows(proj, Matrix<F>::identity(f, dm));
  if (!lifts) throw ModuleError("extension: projection is not onto");
  Matrix<F> base = Matrix<F>::vstack(f, {inj, *lifts}, de);
  auto base_inv = inverse(base);
  if (!base_inv) throw ModuleError("extension: sequence is not exact");
  std::vector<Matrix<F>> act;
  for (const auto& x : q.module->actions()) act.push_back(base * x * *base_inv);
  auto mid = Module<F>::trusted(a, std::move(act), de);
  ShortExact<F> s;
  s.left = ext.n;
  s.middle = mid;
  s.right = ext.m;
  s.inject = {ext.n, mid, inj * *base_inv};
  s.project = {mid, ext.m, base * proj};
  return s;
}

template <ExactField F>
ArEngine<F>::ArEngine(std::shared_ptr<const Catalogue<F>> c) : catalogue_(std::move(c)) {
  std_op_ = standard_modules(opposite(), standard().idempotents);
  for (std::size_t i = 0; i < catalogue_->size(); ++i) {
    const auto& x = catalogue_->member(i);
    projective_.push_back(is_projective(x, standard()));
    injective_.push_back(is_injective(x, standard()));
    end_rad_.push_back(std::make_shared<const SubspaceBasis<F>>(endo_algebra(x).algebra->radical()));
  }
}

template <ExactField F>
const SubspaceBasis<F>& ArEngine<F>::end_radical(std::size_t i) const {
  return *end_rad_[i];
}

template <ExactField F>
ModulePtr<F> ArEngine<F>::tau(const ModulePtr<F>& m) const {
  auto pres = minimal_projective_presentation(m, standard());
  if (pres.syzygy.module->dim() == 0) throw IsProjective("tau of a projective module");
  return dual_module(transpose(pres, opposite()), algebra());
}

template <ExactField F>
ModulePtr<F> ArEngine<F>::tau_inverse(const ModulePtr<F>& m) const {
  auto pres = minimal_projective_presentation(dual_module(m, opposite()), std_op_);
  if (pres.syzygy.module->dim() == 0) throw IsInjective("tau inverse of an injective module");
  return transpose(pres, algebra());
}

template <ExactField F>
std::optional<std::size_t> ArEngine<F>::tau_member(std::size_t i) const {
  if (projective_[i]) return std::nullopt;
  {
    std::lock_guard lock(mutex_);
    if (auto it = tau_.find(i); it != tau_.end()) return it->second;
  }
  auto t = catalogue_->match(tau(catalogue_->member(i)));
  if (!t) throw CertificationFailed("tau of " + catalogue_->label(i) + " is not in the catalogue");
  std::lock_guard lock(mutex_);
  tau_[i] = t;
  return t;
}

template <ExactField F>
std::optional<std::size_t> ArEngine<F>::tau_inverse_member(std::size_t i) const {
  if (injective_[i]) return std::nullopt;
  {
    std::lock_guard lock(mutex_);
    if (auto it = tau_inv_.find(i); it != tau_inv_.end()) return it->second;
  }
  auto t = catalogue_->match(tau_inverse(catalogue_->member(i)));
  if (!t) throw CertificationFailed("tau inverse of " + catalogue_->label(i) + " is not in the catalogue");
  std::lock_guard lock(mutex_);
  tau_inv_[i] = t;
  return t;
}

template <ExactField F>
bool ArEngine<F>::is_right_almost_split(const Morphism<F>& g, std::size_t m) const {
  if (is_split_epi(g)) return false;
  const auto& target = catalogue_->member(m);
  for (std::size_t z = 0; z < catalogue_->size(); ++z) {
    const auto& zm = catalogue_->member(z);
    auto hzm = hom_basis(zm, target);
    if (hzm.size() == 0) continue;
    auto need = z == m ? end_radical(m) : SubspaceBasis<F>::full(g.matrix.field(), hzm.size());
    if (need.is_zero()) continue;
    auto hze = hom_basis(zm, g.source);
    Matrix<F> rows(g.matrix.field(), hze.size(), hzm.size());
    for (std::size_t k = 0; k < hze.size(); ++k) rows.set_row(k, hzm.coordinates(compose(hze.morphism(k), g)));
    if (!SubspaceBasis<F>::span(rows).contains(need)) return false;
  }
  return true;
}

template <ExactField F>
bool ArEngine<F>::is_left_almost_split(const Morphism<F>& j, std::size_t n) const {
  if (is_split_mono(j)) return false;
  const auto& source = catalogue_->member(n);
  for (std::size_t z = 0; z < catalogue_->size(); ++z) {
    const auto& zm = catalogue_->member(z);
    auto hnz = hom_basis(source, zm);
    if (hnz.size() == 0) continue;
    auto need = z == n ? end_radical(n) : SubspaceBasis<F>::full(j.matrix.field(), hnz.size());
    if (need.is_zero()) continue;
    auto hez = hom_basis(j.target, zm);
    Matrix<F> rows(j.matrix.field(), hez.size(), hnz.size());
    for (std::size_t k = 0; k < hez.size(); ++k) rows.set_row(k, hnz.coordinates(compose(j, hez.morphism(k))));
    if (!SubspaceBasis<F>::span(rows).contains(need)) return false;
  }
  return true;
}

namespace {

// basis classes first, then further classes up to scaling while the count stays small
template <ExactField F>
std::vector<Matrix<F>> candidate_classes(const F& f, std::size_t e) {
  std::vector<Matrix<F>> out;
  for (std::size_t i = 0; i < e; ++i) out.push_back(Matrix<F>::unit_vector(f, e, i));
  std::vector<typename F::Elem> digits;
  if (f.order() > 0) {
    for (std::uint64_t i = 0; i < f.order(); ++i) digits.push_back(f.element(i));
  } else {
    digits = {f.zero(), f.one(), f.neg(f.one())};
  }
  const std::uint64_t base = digits.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < e; ++i) {
    total *= base;
    if (total > 4096) return out;
  }
  for (std::uint64_t n = 1; n < total; ++n) {
    Matrix<F> v(f, 1, e);
    std::uint64_t r = n;
    for (std::size_t i = 0; i < e; ++i, r /= base) v[i] = digits[r % base];
    std::size_t nonzero = 0;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < e; ++i)
      if (!f.is_zero(v[i])) {
        ++nonzero;
        if (!first) first = i;
      }
    if (!first || !f.is_one(v[*first]) || nonzero == 1) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

template <ExactField F>
std::shared_ptr<const AlmostSplitSequence<F>> ArEngine<F>::almost_split_sequence(std::size_t m) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = sequences_.find(m); it != sequences_.end()) return it->second;
  }
  const auto& label = catalogue_->label(m);
  if (projective_[m]) throw IsProjective(label + " is projective");
  std::size_t t = *tau_member(m);
  auto ext = ext1(catalogue_->member(m), catalogue_->member(t), standard());
  if (ext.dim() == 0) throw CertificationFailed("Ext^1(" + label + ", tau " + label + ") vanishes");
  auto cands = candidate_classes(catalogue_->field(), ext.dim());
  for (std::size_t k = 0; k < cands.size(); ++k) {
    auto s = extension(ext, cands[k]);
    if (!is_right_almost_split(s.project, m) || !is_left_almost_split(s.inject, t)) continue;
    auto out = std::make_shared<AlmostSplitSequence<F>>();
    out->left = t;
    out->right = m;
    out->seq = std::move(s);
    out->ext_dim = ext.dim();
    out->candidate = k;
    std::lock_guard lock(mutex_);
    sequences_[m] = out;
    return out;
  }
  throw CertificationFailed("no extension class certifies an almost split sequence ending at " + label);
}

template <ExactField F>
std::shared_ptr<const AlmostSplitSequence<F>> ArEngine<F>::almost_split_sequence_from(std::size_t n) const {
  if (injective_[n]) throw IsInjective(catalogue_->label(n) + " is injective");
  auto s = almost_split_sequence(*tau_inverse_member(n));
  if (s->left != n) throw CertificationFailed("tau tau^-1 of " + catalogue_->label(n) + " is a different member");
  return s;
}

template <ExactField F>
std::vector<std::size_t> middle_multiplicities(const RadicalTable<F>& t, const AlmostSplitSequence<F>& s) {
  std::vector<std::size_t> out(t.size(), 0);
  for (auto i : t.split(s.seq.middle)->members) ++out[i];
  return out;
}

template <ExactField F>
ArQuiver ar_quiver(const RadicalTable<F>& t, const ArEngine<F>& e) {
  const auto& c = t.catalogue();
  ArQuiver q;
  q.labels = c.labels();
  for (std::size_t i = 0; i < c.size(); ++i) q.dims.push_back(c.dimension_string(i));
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      auto irr = t.irr_space(x, y);
      if (irr.dim == 0) continue;
      q.arrows.push_back({x, y, irr.dim, irr.a, irr.b});
    }
  for (std::size_t i = 0; i < c.size(); ++i) q.tau.push_back(e.tau_member(i));
  return q;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const ArQuiver& q) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < q.labels.size(); ++i) {
    // \n is a DOT line break, so it goes in after quoting
    auto label = quoted(q.labels[i]);
    label.insert(label.size() - 1, "\\n" + q.dims[i]);
    os << "  " << quoted(q.labels[i]) << " [label=" << label << "];\n";
  }
  for (const auto& a : q.arrows)
    os << "  " << quoted(q.labels[a.source]) << " -> " << quoted(q.labels[a.target]) << " [label=\"(" << a.a << ","
       << a.b << ")\"];\n";
  for (std::size_t i = 0; i < q.tau.size(); ++i)
    if (q.tau[i])
      os << "  " << quoted(q.labels[i]) << " -> " << quoted(q.labels[*q.tau[i]])
         << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

template <ExactField F>
CompletenessReport completeness_check(std::shared_ptr<const Catalogue<F>> c) {
  CompletenessReport r;
  std::vector<ModulePtr<F>> missing;
  auto note_missing = [&](const ModulePtr<F>& m, const std::string& why) {
    for (const auto& x : missing)
      if (x->dim() == m->dim() && are_isomorphic(x, m)) return;
    missing.push_back(m);
    r.missing_dims.push_back(m->dim());
    r.issues.push_back("missing indecomposable of dimension " + std::to_string(m->dim()) + " (" + why + ")");
  };
  const auto& sm = c->standard();
  for (std::size_t i = 0; i < sm.idempotents.size(); ++i) {
    auto n = std::to_string(i + 1);
    if (!c->match(sm.projectives[i])) note_missing(sm.projectives[i], "projective " + n);
    if (!c->match(sm.injectives[i])) note_missing(sm.injectives[i], "injective " + n);
    if (!c->match(sm.simples[i])) note_missing(sm.simples[i], "simple " + n);
  }
  ArEngine<F> e(c);
  for (std::size_t i = 0; i < c->size(); ++i) {
    const auto& x = c->member(i);
    const auto& label = c->label(i);
    bool tau_ok = true;
    if (!e.member_projective(i)) {
      auto t = e.tau(x);
      if (!c->match(t)) {
        note_missing(t, "tau " + label);
        tau_ok = false;
      }
    }
    if (!e.member_injective(i)) {
      auto t = e.tau_inverse(x);
      if (!c->match(t)) note_missing(t, "tau^-1 " + label);
    }
    if (e.member_projective(i) || !tau_ok) continue;
    try {
      auto s = e.almost_split_sequence(i);
      for (const auto& part : decompose(s->seq.middle))
        if (!c->match(part.module)) note_missing(part.module, "middle term of the sequence ending at " + label);
    } catch (const CertificationFailed& ex) {
      r.issues.push_back(ex.what());
    }
  }
  r.complete = r.issues.empty();
  return r;
}

#define RADDEG_INSTANTIATE(F)                                                                                \
  template ProjectiveCover<F> projective_cover(const ModulePtr<F>&, const StandardModules<F>&);              \
  template Presentation<F> minimal_projective_presentation(const ModulePtr<F>&, const StandardModules<F>&);  \
  template ModulePtr<F> transpose(const Presentation<F>&, const AlgebraPtr<F>&);                             \
  template ExtSpace<F> ext1(const ModulePtr<F>&, const ModulePtr<F>&, const StandardModules<F>&);            \
  template ShortExact<F> extension(const ExtSpace<F>&, const Matrix<F>&);                                    \
  template class ArEngine<F>;                                                                                \
  template std::vector<std::size_t> middle_multiplicities(const RadicalTable<F>&, const AlmostSplitSequence<F>&); \
  template ArQuiver ar_quiver(const RadicalTable<F>&, const ArEngine<F>&);                                   \
  template CompletenessReport completeness_check(std::shared_ptr<const Catalogue<F>>);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
