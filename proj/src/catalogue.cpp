#include "raddeg/catalogue.hpp"

#include <algorithm>

#include "raddeg/fleet.hpp"

namespace raddeg {

template <ExactField F>
Catalogue<F>::Catalogue(AlgebraPtr<F> algebra, std::vector<std::string> labels, std::vector<ModulePtr<F>> members,
                        std::vector<Matrix<F>> idempotents)
    : algebra_(std::move(algebra)), labels_(std::move(labels)), members_(std::move(members)) {
  if (labels_.size() != members_.size()) throw ModuleError("one label per catalogue member expected");
  for (const auto& m : members_)
    if (!same_algebra(m->algebra(), *algebra_)) throw ModuleError("catalogue member over a different algebra");
  standard_ = std::make_shared<const StandardModules<F>>(standard_modules(algebra_, std::move(idempotents)));
  for (const auto& m : members_) signatures_.push_back(signature(*m));
}

template <ExactField F>
std::optional<std::size_t> Catalogue<F>::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

template <ExactField F>
std::vector<std::size_t> Catalogue<F>::signature(const Module<F>& m) const {
  std::vector<std::size_t> s;
  for (const auto& e : standard_->idempotents) s.push_back(rank(m.action_of(e)));
  return s;
}

template <ExactField F>
std::string Catalogue<F>::dimension_string(std::size_t i) const {
  std::string s = "(";
  for (std::size_t k = 0; k < signatures_[i].size(); ++k) {
    if (k) s += ",";
    s += std::to_string(signatures_[i][k]);
  }
  return s + ")";
}

template <ExactField F>
std::optional<std::size_t> Catalogue<F>::match(const ModulePtr<F>& m) const {
  auto r = match_with_iso(m);
  if (!r) return std::nullopt;
  return r->first;
}

template <ExactField F>
std::optional<std::pair<std::size_t, Morphism<F>>> Catalogue<F>::match_with_iso(const ModulePtr<F>& m) const {
  auto sig = signature(*m);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]->dim() != m->dim() || signatures_[i] != sig) continue;
    if (members_[i] == m) return std::make_pair(i, identity_morphism(m));
    auto iso = find_isomorphism(m, members_[i]);
    if (iso) return std::make_pair(i, *iso);
  }
  return std::nullopt;
}

namespace {

template <ExactField F>
bool is_nakayama_quiver(const QuiverPresentation& q) {
  std::vector<int> in(q.vertices.size(), 0), out(q.vertices.size(), 0);
  for (const auto& a : q.arrows) {
    ++out[a.source];
    ++in[a.target];
  }
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    if (in[v] > 1 || out[v] > 1) return false;
  return true;
}

// submodule P J^l of a module P, as rows in P's coordinates
template <ExactField F>
Matrix<F> radical_power_rows(const ModulePtr<F>& p, std::size_t l) {
  const auto& a = p->algebra();
  const auto& j = a.radical();
  Matrix<F> cur = Matrix<F>::identity(p->field(), p->dim());
  for (std::size_t step = 0; step < l; ++step) {
    std::vector<Matrix<F>> parts;
    for (std::size_t k = 0; k < j.dim(); ++k) parts.push_back(cur * p->action_of(j.vector(k)));
    auto sp = SubspaceBasis<F>::span(Matrix<F>::vstack(p->field(), parts, p->dim()));
    cur = sp.basis();
  }
  return cur;
}

}  // namespace

template <ExactField F>
Catalogue<F> nakayama_catalogue(const PathAlgebra<F>& pa) {
  const auto& q = pa.presentation;
  if (!is_nakayama_quiver<F>(q)) throw NotNakayama("a vertex has two incoming or two outgoing arrows");
  const auto& a = pa.algebra;
  std::vector<Matrix<F>> idem;
  for (auto b : pa.vertex_basis) idem.push_back(a->basis_element(b));
  auto reg = regular_module(a);
  std::vector<std::string> labels;
  std::vector<ModulePtr<F>> members;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    auto p = submodule(reg, a->left_multiplication(idem[v])).module;
    for (std::size_t l = 1; l <= p->dim(); ++l) {
      auto rows = radical_power_rows(p, l);
      if (p->dim() - rows.rows() != l) throw NotNakayama("projective at vertex " + q.vertices[v] + " is not uniserial");
      members.push_back(quotient_module(p, rows).module);
      if (q.vertices.size() == 1) {
        labels.push_back("M" + std::to_string(l));
        continue;
      }
      // follow the unique path of length l-1 out of v
      std::size_t w = v;
      for (std::size_t s = 0; s + 1 < l; ++s)
        for (const auto& arw : q.arrows)
          if (arw.source == w) {
            w = arw.target;
            break;
          }
      std::string lab = "[" + q.vertices[v] + "," + q.vertices[w] + "]";
      if (l > q.vertices.size()) lab += "#" + std::to_string(l);
      labels.push_back(lab);
    }
  }
  return Catalogue<F>(a, labels, members, idem);
}

template <ExactField F>
ModulePtr<F> interval_module(const PathAlgebra<F>& pa, std::size_t lo, std::size_t hi) {
  const F& f = pa.algebra->field();
  std::size_t n = pa.presentation.vertices.size();
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t v = lo; v <= hi; ++v) dims[v] = 1;
  std::vector<Matrix<F>> maps;
  for (const auto& a : pa.presentation.arrows) {
    Matrix<F> m(f, dims[a.source], dims[a.target]);
    if (dims[a.source] && dims[a.target]) m.at(0, 0) = f.one();
    maps.push_back(m);
  }
  return representation_module(pa, dims, maps);
}

template <ExactField F>
Catalogue<F> type_a_catalogue(const PathAlgebra<F>& pa) {
  const auto& q = pa.presentation;
  const std::size_t n = q.vertices.size();
  if (!q.relations.empty()) throw NotTypeA("type A catalogue needs a quiver without relations");
  if (q.arrows.size() + 1 != n) throw NotTypeA("an A_n quiver has n-1 arrows");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& a = q.arrows[i];
    bool ok = (a.source == i && a.target == i + 1) || (a.source == i + 1 && a.target == i);
    if (!ok) throw NotTypeA("arrow " + a.name + " does not join consecutive vertices");
  }
  std::vector<Matrix<F>> idem;
  for (auto b : pa.vertex_basis) idem.push_back(pa.algebra->basis_element(b));
  std::vector<std::string> labels;
  std::vector<ModulePtr<F>> members;
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = lo; hi < n; ++hi) {
      members.push_back(interval_module(pa, lo, hi));
      labels.push_back("[" + q.vertices[lo] + "," + q.vertices[hi] + "]");
    }
  return Catalogue<F>(pa.algebra, labels, members, idem);
}

Catalogue<FiniteField> species_catalogue() {
  auto a = std::make_shared<const Algebra<FiniteField>>(species_algebra());
  const auto& f = a->field();
  auto reg = regular_module(a);
  auto e11 = a->basis_element(0), e22 = a->basis_element(4);
  auto s2 = submodule(reg, a->left_multiplication(e22)).module;
  auto p1 = submodule(reg, a->left_multiplication(e11)).module;
  // P1 has basis E11, wE11, E12, wE12 in that order; kill E12
  Matrix<FiniteField> e12(f, 1, p1->dim());
  auto incl = submodule(reg, a->left_multiplication(e11)).inclusion;
  for (std::size_t r = 0; r < p1->dim(); ++r)
    if (incl.matrix.row(r) == a->basis_element(2)) e12.at(0, r) = f.one();
  auto quo = quotient_module(p1, e12).module;
  auto s1 = module_top(p1).module;
  return Catalogue<FiniteField>(a, {"S2", "P1", "P1/S2", "S1"}, {s2, p1, quo, s1}, {e11, e22});
}

template <ExactField F>
ValidationReport validate(const Catalogue<F>& c) {
  ValidationReport r;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!is_indecomposable(c.member(i))) {
      r.ok = false;
      r.issues.push_back("member " + c.label(i) + " is not indecomposable");
    }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c.member(i)->dim() != c.member(j)->dim() || c.member_signature(i) != c.member_signature(j)) continue;
      if (!is_indecomposable(c.member(i))) continue;
      if (find_isomorphism(c.member(i), c.member(j))) {
        r.ok = false;
        r.issues.push_back("members " + c.label(i) + " and " + c.label(j) + " are isomorphic");
      }
    }
  return r;
}

template <ExactField F>
void require_valid(const Catalogue<F>& c) {
  auto r = validate(c);
  if (!r.ok) throw InvariantViolation(r.issues.front());
}

#define RADDEG_INSTANTIATE(F)                                                              \
  template class Catalogue<F>;                                                             \
  template Catalogue<F> nakayama_catalogue(const PathAlgebra<F>&);                         \
  template Catalogue<F> type_a_catalogue(const PathAlgebra<F>&);                           \
  template ModulePtr<F> interval_module(const PathAlgebra<F>&, std::size_t, std::size_t);  \
  template ValidationReport validate(const Catalogue<F>&);                                 \
  template void require_valid(const Catalogue<F>&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
