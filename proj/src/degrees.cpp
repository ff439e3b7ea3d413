#include "raddeg/degrees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace raddeg {

namespace {

template <ExactField F>
std::string matrix_key(const Matrix<F>& m) {
  std::string s = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += m.field().to_string(m[i]);
    s += ',';
  }
  return s;
}

template <ExactField F>
std::vector<Morphism<F>> kappa_reps(const ModulePtr<F>& x) {
  auto r = residue_division_algebra(x);
  std::vector<Morphism<F>> out;
  for (std::size_t i = 0; i < r.basis.rows(); ++i) out.push_back(r.end.hom.element(r.basis.row(i)));
  return out;
}

template <ExactField F>
bool indecomposable_end(const RadicalTable<F>& t, const ModulePtr<F>& m) {
  return t.split(m)->members.size() == 1;
}

template <ExactField F>
std::size_t member_of(const RadicalTable<F>& t, const ModulePtr<F>& m) {
  auto s = t.split(m);
  if (s->members.size() != 1) throw std::invalid_argument("module is not indecomposable");
  return s->members[0];
}

// components of f between members, all sharing the indecomposable endpoint
template <ExactField F>
struct Components {
  bool x_form = true;
  std::size_t fixed = 0;
  std::vector<std::size_t> others;
  std::vector<Morphism<F>> maps;
  std::size_t source(std::size_t j) const { return x_form ? fixed : others[j]; }
  std::size_t target(std::size_t j) const { return x_form ? others[j] : fixed; }
};

template <ExactField F>
Components<F> components(const RadicalTable<F>& t, const Morphism<F>& f) {
  auto sx = t.split(f.source), sy = t.split(f.target);
  Components<F> c;
  if (sx->members.size() == 1) {
    c.fixed = sx->members[0];
    auto base = compose(sx->inclusions[0], f);
    for (std::size_t j = 0; j < sy->members.size(); ++j) c.maps.push_back(compose(base, sy->projections[j]));
    c.others = sy->members;
  } else if (sy->members.size() == 1) {
    c.x_form = false;
    c.fixed = sy->members[0];
    auto base = compose(f, sy->projections[0]);
    for (std::size_t j = 0; j < sx->members.size(); ++j) c.maps.push_back(compose(sx->inclusions[j], base));
    c.others = sx->members;
  } else {
    throw std::invalid_argument("neither endpoint is indecomposable");
  }
  return c;
}

// rank of the residues {u c_j v} over the given far-side and near-side units
template <ExactField F>
std::size_t residue_rank(const RadicalTable<F>& t, const Components<F>& c, std::size_t w,
                         const std::vector<Morphism<F>>& pre, const std::vector<Morphism<F>>& post) {
  std::size_t x = 0, y = 0;
  std::vector<Matrix<F>> rows;
  for (std::size_t j = 0; j < c.maps.size(); ++j) {
    if (c.others[j] != w) continue;
    x = c.source(j);
    y = c.target(j);
  }
  QuotientSpace<F> q(t.power(x, y, 1), t.power(x, y, 2));
  for (std::size_t j = 0; j < c.maps.size(); ++j) {
    if (c.others[j] != w) continue;
    for (const auto& u : pre)
      for (const auto& v : post) rows.push_back(q.coordinates(t.hom(x, y).coordinates(compose(compose(u, c.maps[j]), v))));
  }
  return rank(Matrix<F>::vstack(t.field(), rows, q.dim()));
}

template <ExactField F>
std::vector<Morphism<F>> identity_only(const ModulePtr<F>& m) {
  return {identity_morphism(m)};
}

template <ExactField F>
Depth left_depth(const RadicalTable<F>& t, std::size_t z, const EndpointSplit<F>& s, const Matrix<F>& coords) {
  if (coords.is_zero()) return {};
  std::size_t n = 0;
  while (n < t.N() && t.left_power(z, s, n + 1).contains(coords)) ++n;
  return {n};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <class T>
std::string show(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "inf";
}

}  // namespace

template <ExactField F>
DegreeReport<F> left_degree(const RadicalTable<F>& t, const Morphism<F>& f) {
  auto dd = t.depth(f);
  if (!dd.value) throw ZeroMorphism("left degree of a zero morphism");
  DegreeReport<F> r;
  r.side = Side::left;
  r.depth = *dd.value;
  r.bound = t.N();
  auto sx = t.split(f.source);
  for (std::size_t m = 0; m < t.N(); ++m)
    for (std::size_t z = 0; z < t.size(); ++z) {
      auto g = t.graded_map_left(f, r.depth, z, m);
      if (g.source.dim() == 0) continue;
      auto k = kernel_basis(g.matrix);
      if (k.dim() == 0) continue;
      auto u = t.left_element(z, *sx, k.vector(0) * g.source.representatives());
      r.value = m;
      r.witness = DegreeWitness<F>{z, u, *t.depth(u).value, t.depth(compose(u, f))};
      return r;
    }
  return r;
}

template <ExactField F>
DegreeReport<F> right_degree(const RadicalTable<F>& t, const Morphism<F>& f) {
  auto dd = t.depth(f);
  if (!dd.value) throw ZeroMorphism("right degree of a zero morphism");
  DegreeReport<F> r;
  r.side = Side::right;
  r.depth = *dd.value;
  r.bound = t.N();
  auto sy = t.split(f.target);
  for (std::size_t m = 0; m < t.N(); ++m)
    for (std::size_t z = 0; z < t.size(); ++z) {
      auto g = t.graded_map_right(f, r.depth, z, m);
      if (g.source.dim() == 0) continue;
      auto k = kernel_basis(g.matrix);
      if (k.dim() == 0) continue;
      auto h = t.right_element(*sy, z, k.vector(0) * g.source.representatives());
      r.value = m;
      r.witness = DegreeWitness<F>{z, h, *t.depth(h).value, t.depth(compose(f, h))};
      return r;
    }
  return r;
}

template <ExactField F>
bool is_irreducible(const RadicalTable<F>& t, const Morphism<F>& f) {
  if (f.source->dim() == 0 || f.target->dim() == 0) return false;
  auto c = components(t, f);
  for (std::size_t j = 0; j < c.maps.size(); ++j) {
    auto x = c.source(j), y = c.target(j);
    if (!t.power(x, y, 1).contains(t.hom(x, y).coordinates(c.maps[j]))) return false;
  }
  std::set<std::size_t> groups(c.others.begin(), c.others.end());
  for (auto w : groups) {
    auto count = static_cast<std::size_t>(std::count(c.others.begin(), c.others.end(), w));
    const auto& far = t.catalogue().member(w);
    auto reps = kappa_reps(far);
    std::size_t r = c.x_form ? residue_rank(t, c, w, identity_only(t.catalogue().member(c.fixed)), reps)
                             : residue_rank(t, c, w, reps, identity_only(t.catalogue().member(c.fixed)));
    if (r != count * t.kappa_dim(w)) return false;
  }
  return true;
}

template <ExactField F>
bool freely_irreducible_check(const RadicalTable<F>& t, const Morphism<F>& f) {
  if (!is_irreducible(t, f)) throw NotIrreducible("freely_irreducible_check: morphism is not irreducible");
  auto c = components(t, f);
  auto near = kappa_reps(t.catalogue().member(c.fixed));
  std::set<std::size_t> groups(c.others.begin(), c.others.end());
  for (auto w : groups) {
    auto count = static_cast<std::size_t>(std::count(c.others.begin(), c.others.end(), w));
    auto far = kappa_reps(t.catalogue().member(w));
    std::size_t r = c.x_form ? residue_rank(t, c, w, near, far) : residue_rank(t, c, w, far, near);
    if (r != count * t.kappa_dim(w) * t.kappa_dim(c.fixed)) return false;
  }
  return true;
}

template <ExactField F>
KernelGrading<F> depth_graded_kernel_decomposition(const RadicalTable<F>& t, const Morphism<F>& f) {
  KernelGrading<F> g;
  g.kernel = kernel(f);
  const auto& k = g.kernel.module;
  if (k->dim() == 0) return g;
  const F& fld = t.field();
  auto sk = t.split(k);
  auto sx = t.split(f.source);
  const auto& i = g.kernel.inclusion;
  std::set<std::size_t> kinds(sk->members.begin(), sk->members.end());
  for (auto z : kinds) {
    auto mult = static_cast<std::size_t>(std::count(sk->members.begin(), sk->members.end(), z));
    std::size_t lk = 0, lx = 0;
    for (auto m : sk->members) lk += t.hom(z, m).size();
    for (auto m : sx->members) lx += t.hom(z, m).size();
    Matrix<F> psi(fld, lk, lx);
    for (std::size_t e = 0; e < lk; ++e)
      psi.set_row(e, t.left_coords(z, compose(t.left_element(z, *sk, Matrix<F>::unit_vector(fld, lk, e)), i), *sx));
    auto chosen = t.left_power(z, *sk, 1);
    auto reps = kappa_reps(t.catalogue().member(z));
    std::size_t got = 0;
    for (std::size_t m = t.N(); m-- > 0 && got < mult;) {
      QuotientSpace<F> q(SubspaceBasis<F>::full(fld, lx), t.left_power(z, *sx, m));
      SubspaceBasis<F> deep = SubspaceBasis<F>::full(fld, lk);
      if (q.dim() > 0) {
        Matrix<F> phi(fld, lk, q.dim());
        for (std::size_t e = 0; e < lk; ++e) phi.set_row(e, q.coordinates(psi.row(e)));
        deep = kernel_basis(phi);
      }
      for (std::size_t b = 0; b < deep.dim() && got < mult; ++b) {
        auto v = deep.vector(b);
        if (chosen.contains(v)) continue;
        auto u = t.left_element(z, *sk, v);
        g.pieces.push_back({z, u, *t.depth(compose(u, i)).value});
        std::vector<Matrix<F>> span{chosen.basis()};
        for (const auto& rho : reps) span.push_back(t.left_coords(z, compose(rho, u), *sk));
        chosen = SubspaceBasis<F>::span(Matrix<F>::vstack(fld, span, lk));
        ++got;
      }
    }
    if (got != mult) throw std::logic_error("kernel grading: summands not found");
  }
  std::stable_sort(g.pieces.begin(), g.pieces.end(), [](const auto& a, const auto& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.member < b.member;
  });
  return g;
}

template <ExactField F>
IrrChoices<F> irreducible_maps(const RadicalTable<F>& t, std::size_t x, std::size_t y, std::size_t limit) {
  IrrChoices<F> out;
  const auto& r1 = t.power(x, y, 1);
  const auto& r2 = t.power(x, y, 2);
  if (r1.dim() == r2.dim()) return out;
  const F& f = t.field();
  const auto& h = t.hom(x, y);
  std::uint64_t total = 1;
  bool small = f.order() > 0;
  for (std::size_t i = 0; i < r1.dim() && small; ++i) {
    total *= f.order();
    small = total <= limit;
  }
  if (small) {
    for (std::uint64_t n = 1; n < total; ++n) {
      Matrix<F> c(f, 1, r1.dim());
      std::uint64_t r = n;
      for (std::size_t i = 0; i < r1.dim(); ++i, r /= f.order()) c[i] = f.element(r % f.order());
      auto v = r1.combine(c);
      if (!r2.contains(v)) out.maps.push_back(h.element(v));
    }
    return out;
  }
  out.exhaustive = false;
  QuotientSpace<F> q(r1, r2);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    auto v = q.representative(i);
    out.maps.push_back(h.element(v));
    for (std::size_t j = 0; j < r2.dim(); ++j) out.maps.push_back(h.element(v + r2.vector(j)));
  }
  return out;
}

namespace {

template <ExactField F>
struct PathState {
  std::size_t vertex = 0;
  Morphism<F> composite;
  std::vector<std::size_t> vertices;
  std::vector<Morphism<F>> maps;
};

template <ExactField F>
class ChoiceCache {
 public:
  ChoiceCache(const RadicalTable<F>& t, std::size_t limit) : t_(t), limit_(limit) {}
  const IrrChoices<F>& get(std::size_t x, std::size_t y) {
    auto key = std::make_pair(x, y);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, irreducible_maps(t_, x, y, limit_)).first;
    if (!it->second.exhaustive) exhaustive_ = false;
    return it->second;
  }
  bool exhaustive() const { return exhaustive_; }

 private:
  const RadicalTable<F>& t_;
  std::size_t limit_;
  std::map<std::pair<std::size_t, std::size_t>, IrrChoices<F>> cache_;
  bool exhaustive_ = true;
};

// all nonzero composites of irreducible paths of the given length from x,
// one representative path per (end vertex, composite)
template <ExactField F>
std::vector<PathState<F>> nonzero_paths(const RadicalTable<F>& t, ChoiceCache<F>& cache, std::size_t x,
                                        std::size_t length) {
  std::vector<PathState<F>> layer{{x, identity_morphism(t.catalogue().member(x)), {x}, {}}};
  for (std::size_t s = 0; s < length; ++s) {
    std::vector<PathState<F>> next;
    std::set<std::pair<std::size_t, std::string>> seen;
    for (const auto& st : layer)
      for (std::size_t w = 0; w < t.size(); ++w)
        for (const auto& u : cache.get(st.vertex, w).maps) {
          auto c = compose(st.composite, u);
          if (c.is_zero()) continue;
          if (!seen.insert({w, matrix_key(c.matrix)}).second) continue;
          PathState<F> n{w, c, st.vertices, st.maps};
          n.vertices.push_back(w);
          n.maps.push_back(u);
          next.push_back(std::move(n));
        }
    layer = std::move(next);
  }
  return layer;
}

// does some choice of irreducible maps along the fixed vertices compose to zero
template <ExactField F>
bool zero_path_along(const RadicalTable<F>& t, ChoiceCache<F>& cache, const std::vector<std::size_t>& verts) {
  std::map<std::string, Matrix<F>> layer;
  auto id = Matrix<F>::identity(t.field(), t.catalogue().member(verts[0])->dim());
  layer.emplace(matrix_key(id), id);
  for (std::size_t s = 1; s < verts.size(); ++s) {
    std::map<std::string, Matrix<F>> next;
    const auto& ch = cache.get(verts[s - 1], verts[s]);
    for (const auto& [k, c] : layer)
      for (const auto& u : ch.maps) {
        auto p = c * u.matrix;
        next.emplace(matrix_key(p), std::move(p));
      }
    layer = std::move(next);
  }
  for (const auto& [k, c] : layer)
    if (c.is_zero()) return true;
  return false;
}

}  // namespace

template <ExactField F>
KernelPath<F> find_kernel_path(const RadicalTable<F>& t, const Morphism<F>& f) {
  auto sx = t.split(f.source);
  if (sx->members.size() != 1) throw std::invalid_argument("find_kernel_path: domain is not indecomposable");
  auto ker = kernel(f);
  if (ker.module->dim() == 0) throw std::invalid_argument("find_kernel_path: morphism is a monomorphism");
  std::size_t k = member_of(t, ker.module);
  std::size_t x = sx->members[0];
  auto n = *t.depth(ker.inclusion).value;
  auto fm = compose(sx->inclusions[0], f);
  const auto& end = t.hom(x, x);
  const auto& jac = t.power(x, x, 1);
  ChoiceCache<F> cache(t, 256);
  for (const auto& st : nonzero_paths(t, cache, k, n)) {
    if (st.vertex != x || !is_mono(st.composite)) continue;
    // an automorphism a of X with composite a f = 0
    std::vector<Matrix<F>> rows;
    for (const auto& a : end.morphisms()) rows.push_back(compose(compose(st.composite, a), fm).matrix.flattened());
    auto sols = kernel_basis(Matrix<F>::vstack(t.field(), rows, f.source->dim() == 0 ? 0 : rows[0].cols()));
    for (std::size_t s = 0; s < sols.dim(); ++s) {
      if (jac.contains(sols.vector(s))) continue;
      auto a = end.element(sols.vector(s));
      KernelPath<F> p;
      p.vertices = st.vertices;
      p.maps = st.maps;
      if (p.maps.empty()) {
        p.composite = a;
      } else {
        p.maps.back() = compose(p.maps.back(), a);
        p.composite = compose(st.composite, a);
      }
      return p;
    }
  }
  throw SearchExhausted("no path of irreducible maps composes to a kernel morphism");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::violation: return "VIOLATION";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "?";
}

bool TheoremReport::hypothesis(const std::string& name, bool ok, const std::string& data) {
  clauses.push_back({name, true, ok ? Status::holds : Status::fails, data});
  return ok;
}

void TheoremReport::conclusion(const std::string& name, Status s, const std::string& data) {
  clauses.push_back({name, false, s, data});
}

void TheoremReport::finish() {
  bool hyp_failed = false, failed = false, unsure = false;
  for (const auto& c : clauses) {
    if (c.hypothesis && c.status == Status::fails) hyp_failed = true;
    if (!c.hypothesis && c.status == Status::fails) failed = true;
    if (c.status == Status::inconclusive) unsure = true;
  }
  verdict = hyp_failed ? Verdict::hypothesis_not_met
            : failed   ? Verdict::violation
            : unsure   ? Verdict::inconclusive
                       : Verdict::verified;
}

namespace {

struct SequenceCheck {
  std::size_t first = 0, middle = 0, last = 0, rank_in = 0, rank_out = 0;
  bool exact = false;
  std::string str() const {
    std::ostringstream os;
    os << first << "->" << middle << "->" << last << " ranks " << rank_in << "," << rank_out;
    return os.str();
  }
};

template <ExactField F>
SequenceCheck check_sequence(const RadicalTable<F>& t, const Morphism<F>& f, std::size_t d,
                             const KernelGrading<F>& g, std::size_t z, std::size_t l) {
  auto out = t.graded_map_left(f, d, z, l);
  std::vector<Matrix<F>> rows;
  for (const auto& p : g.pieces) {
    if (p.depth > l) continue;
    auto incl = compose(p.inclusion, g.kernel.inclusion);
    rows.push_back(t.graded_map_left(incl, p.depth, z, l - p.depth).matrix);
  }
  auto in = Matrix<F>::vstack(t.field(), rows, out.source.dim());
  SequenceCheck c;
  c.first = in.rows();
  c.middle = out.source.dim();
  c.last = out.target.dim();
  c.rank_in = rank(in);
  c.rank_out = rank(out.matrix);
  bool composite_zero = in.rows() == 0 || out.matrix.cols() == 0 || (in * out.matrix).is_zero();
  c.exact = c.rank_in == c.first && c.rank_in == c.middle - c.rank_out && composite_zero;
  return c;
}

template <ExactField F>
std::string grading_str(const RadicalTable<F>& t, const KernelGrading<F>& g) {
  std::vector<std::string> parts;
  for (const auto& p : g.pieces) parts.push_back(t.catalogue().label(p.member) + "@" + std::to_string(p.depth));
  return parts.empty() ? "0" : join(parts, ",");
}

// every (Z, l) with lo <= l <= hi; returns the first failure or nothing
template <ExactField F>
std::optional<std::string> sweep_sequences(const RadicalTable<F>& t, const Morphism<F>& f, std::size_t d,
                                           const KernelGrading<F>& g, std::size_t lo, std::size_t hi,
                                           std::size_t& checked) {
  for (std::size_t l = lo; l <= hi; ++l)
    for (std::size_t z = 0; z < t.size(); ++z) {
      auto c = check_sequence(t, f, d, g, z, l);
      ++checked;
      if (!c.exact) return "Z=" + t.catalogue().label(z) + " l=" + std::to_string(l) + " dims " + c.str();
    }
  return std::nullopt;
}

template <ExactField F>
std::string path_str(const RadicalTable<F>& t, const std::vector<std::size_t>& verts) {
  std::vector<std::string> parts;
  for (auto v : verts) parts.push_back(t.catalogue().label(v));
  return join(parts, "->");
}

}  // namespace

template <ExactField F>
TheoremReport graded_kernel_sequence_report(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name,
                                            std::optional<std::size_t> lo, std::optional<std::size_t> hi) {
  TheoremReport r{"A", name, {}, Verdict::verified};
  auto dd = t.depth(f);
  if (!r.hypothesis("nonzero", dd.value.has_value(), "depth=" + dd.str())) return r.finish(), r;
  auto dl = left_degree(t, f);
  if (!r.hypothesis("finite left degree", dl.finite(), "d_l=" + dl.str())) return r.finish(), r;
  r.conclusion("homogeneous up to rad^(d+1)", Status::skipped, "not machine-checked");
  auto g = depth_graded_kernel_decomposition(t, f);
  auto kd = t.depth(g.kernel.inclusion);
  std::ostringstream data;
  data << "n=" << dl.str() << " kernel depth=" << kd.str() << " grading=" << grading_str(t, g) << " K(inf)=0";
  r.conclusion("(1)+(2) kernel grading", kd.value == dl.value ? Status::holds : Status::inconclusive, data.str());
  std::size_t from = lo.value_or(*dl.value), to = hi.value_or(t.N() - 1);
  std::size_t checked = 0;
  auto bad = sweep_sequences(t, f, *dd.value, g, from, to, checked);
  r.conclusion("(3) exactness", bad ? Status::inconclusive : Status::holds,
               bad ? *bad : "pairs=" + std::to_string(checked) + " l=" + std::to_string(from) + ".." + std::to_string(to));
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport theorem_b_report(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name) {
  TheoremReport r{"B", name, {}, Verdict::verified};
  bool ends = indecomposable_end(t, f.source) || indecomposable_end(t, f.target);
  if (!r.hypothesis("indecomposable endpoint", ends)) return r.finish(), r;
  auto dd = t.depth(f);
  bool irr = dd.value == 1u && is_irreducible(t, f);
  if (!r.hypothesis("irreducible", irr, "depth=" + dd.str())) return r.finish(), r;
  auto dl = left_degree(t, f);
  if (!r.hypothesis("finite left degree", dl.finite(), "d_l=" + dl.str())) return r.finish(), r;
  const std::size_t n = *dl.value;
  bool free = freely_irreducible_check(t, f);
  r.conclusion("(1) f'=f", free ? Status::holds : Status::skipped,
               free ? "freely irreducible" : "not freely irreducible; f' not machine-checked, using f");
  const Status fail = free ? Status::fails : Status::inconclusive;

  auto g = depth_graded_kernel_decomposition(t, f);
  auto kd = t.depth(g.kernel.inclusion);
  std::ostringstream data;
  data << "n=" << n << " dim Ker=" << g.kernel.module->dim() << " kernel depth=" << kd.str();
  r.conclusion("(2) inclusion in rad^n\\rad^(n+1)", kd.value == n ? Status::holds : fail, data.str());
  if (indecomposable_end(t, f.source) && g.kernel.module->dim() > 0) {
    try {
      auto p = find_kernel_path(t, f);
      r.conclusion("(2) kernel path", p.maps.size() == n ? Status::holds : fail,
                   "length=" + std::to_string(p.maps.size()) + " path=" + path_str(t, p.vertices));
    } catch (const SearchExhausted& ex) {
      r.conclusion("(2) kernel path", fail, ex.what());
    }
  } else {
    r.conclusion("(2) kernel path", Status::skipped, "domain decomposable");
  }
  if (kd.value != n || g.pieces.empty()) {
    r.conclusion("(3) exactness", fail, "kernel grading does not sit at depth n");
  } else {
    std::size_t checked = 0;
    auto bad = sweep_sequences(t, f, 1, g, n, t.N() - 1, checked);
    r.conclusion("(3) exactness", bad ? fail : Status::holds,
                 bad ? *bad
                     : "pairs=" + std::to_string(checked) + " l=" + std::to_string(n) + ".." + std::to_string(t.N() - 1));
  }
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport degree_kernel_equivalence_check(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name) {
  TheoremReport r{"degree-kernel", name, {}, Verdict::verified};
  bool ends = indecomposable_end(t, f.source) || indecomposable_end(t, f.target);
  if (!r.hypothesis("indecomposable endpoint", ends)) return r.finish(), r;
  auto dd = t.depth(f);
  bool irr = dd.value == 1u && is_irreducible(t, f);
  if (!r.hypothesis("irreducible", irr, "depth=" + dd.str())) return r.finish(), r;
  if (!r.hypothesis("freely irreducible", freely_irreducible_check(t, f))) return r.finish(), r;
  auto dl = left_degree(t, f);
  auto ker = kernel(f);
  Depth kd = ker.module->dim() ? t.depth(ker.inclusion) : Depth{};
  r.conclusion("(i)<=>(ii) left", dl.value == kd.value, "d_l=" + dl.str() + " kernel depth=" + kd.str());
  auto dr = right_degree(t, f);
  auto cok = cokernel(f);
  Depth cd = cok.module->dim() ? t.depth(cok.projection) : Depth{};
  r.conclusion("(i)<=>(ii) right", dr.value == cd.value, "d_r=" + dr.str() + " cokernel depth=" + cd.str());
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport mono_epi_degree_check(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name) {
  TheoremReport r{"mono-epi", name, {}, Verdict::verified};
  bool ends = indecomposable_end(t, f.source) || indecomposable_end(t, f.target);
  if (!r.hypothesis("indecomposable endpoint", ends)) return r.finish(), r;
  auto dd = t.depth(f);
  bool irr = dd.value == 1u && is_irreducible(t, f);
  if (!r.hypothesis("irreducible", irr, "depth=" + dd.str())) return r.finish(), r;
  auto dl = left_degree(t, f), dr = right_degree(t, f);
  bool mono = is_mono(f), epi = is_epi(f);
  std::string data = "d_l=" + dl.str() + " d_r=" + dr.str() + " epi=" + (epi ? "yes" : "no") +
                     " mono=" + (mono ? "yes" : "no");
  r.conclusion("(1) d_l finite => not mono, d_r infinite", !dl.finite() || (!mono && !dr.finite()), data);
  r.conclusion("(2) d_r finite => not epi, d_l infinite", !dr.finite() || (!epi && !dl.finite()), data);
  r.conclusion("(3) d_l finite <=> d_r infinite <=> epi", dl.finite() == epi && !dr.finite() == epi, data);
  r.conclusion("(3') d_r finite <=> mono", dr.finite() == mono, data);
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport degree_shift_check(const RadicalTable<F>& t, const ArEngine<F>& e, std::size_t m) {
  const auto& c = t.catalogue();
  TheoremReport r{"shift", c.label(m), {}, Verdict::verified};
  if (!r.hypothesis("non-projective", !e.member_projective(m))) return r.finish(), r;
  auto s = e.almost_split_sequence(m);
  auto se = t.split(s->seq.middle);
  std::vector<std::string> labels;
  for (auto x : se->members) labels.push_back(c.label(x));
  if (!r.hypothesis("X' nonzero", se->members.size() >= 2, "middle=" + join(labels, "+"))) return r.finish(), r;
  for (std::size_t k = 0; k < se->members.size(); ++k) {
    auto f = compose(se->inclusions[k], s->seq.project);
    std::vector<ModulePtr<F>> rest;
    std::vector<Matrix<F>> cols;
    std::vector<std::string> rest_labels;
    for (std::size_t j = 0; j < se->members.size(); ++j) {
      if (j == k) continue;
      rest.push_back(c.member(se->members[j]));
      rest_labels.push_back(c.label(se->members[j]));
      cols.push_back(compose(s->seq.inject, se->projections[j]).matrix);
    }
    auto xp = direct_sum(c.algebra(), rest);
    Morphism<F> g{s->seq.left, xp.module, Matrix<F>::hstack(t.field(), cols, s->seq.left->dim())};
    auto df = left_degree(t, f), dg = left_degree(t, g);
    bool ok = df.finite() == dg.finite() && (!df.finite() || *dg.value + 1 == *df.value);
    r.conclusion("X=" + c.label(se->members[k]) + " X'=" + join(rest_labels, "+"), ok,
                 "d_l(f)=" + df.str() + " d_l(g)=" + dg.str());
  }
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport kernel_iso_check(const RadicalTable<F>& t, const Morphism<F>& f1, const Morphism<F>& f2,
                               const std::string& name) {
  TheoremReport r{"kernel-iso", name, {}, Verdict::verified};
  bool same = f1.source->same_structure(*f2.source) && f1.target->same_structure(*f2.target);
  if (!r.hypothesis("parallel", same)) return r.finish(), r;
  auto sx = t.split(f1.source), sy = t.split(f1.target);
  bool trivial = (sx->members.size() == 1 && t.kappa_dim(sx->members[0]) == 1) ||
                 (sy->members.size() == 1 && t.kappa_dim(sy->members[0]) == 1);
  if (!r.hypothesis("indecomposable endpoint with trivial residue field", trivial)) return r.finish(), r;
  Morphism<F> g2{f1.source, f1.target, f2.matrix};
  bool irr = t.depth(f1).value == 1u && t.depth(g2).value == 1u && is_irreducible(t, f1) && is_irreducible(t, g2);
  if (!r.hypothesis("irreducible", irr)) return r.finish(), r;
  auto d1 = left_degree(t, f1);
  if (!r.hypothesis("d_l(f1) finite", d1.finite(), "d_l(f1)=" + d1.str())) return r.finish(), r;
  auto d2 = left_degree(t, g2);
  r.conclusion("d_l(f1)=d_l(f2)", d1.value == d2.value, "d_l(f1)=" + d1.str() + " d_l(f2)=" + d2.str());
  auto k1 = kernel(f1).module, k2 = kernel(g2).module;
  bool iso = k1->dim() == k2->dim() && k1->dim() > 0 && find_isomorphism(k1, k2).has_value();
  r.conclusion("Ker f1 ~ Ker f2", iso, "dims " + std::to_string(k1->dim()) + "," + std::to_string(k2->dim()));
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport kernel_comparison_check(const RadicalTable<F>& t, const ArEngine<F>& e, const Morphism<F>& f,
                                      const std::string& name) {
  auto sx = t.split(f.source), sy = t.split(f.target);
  if (sy->members.size() < 2) throw std::invalid_argument("kernel_comparison_check: target has one summand, Y2 = 0");
  const auto& c = t.catalogue();
  TheoremReport r{"kernel-comparison", name, {}, Verdict::verified};
  if (!r.hypothesis("X indecomposable", sx->members.size() == 1)) return r.finish(), r;
  bool irr = t.depth(f).value == 1u && is_irreducible(t, f);
  if (!r.hypothesis("irreducible", irr)) return r.finish(), r;
  if (!r.hypothesis("epi", is_epi(f))) return r.finish(), r;
  auto k = kernel(f).module;
  const auto& sm = e.standard();
  auto check_part = [&](const Morphism<F>& fi, const std::string& tag) {
    auto ki = kernel(fi).module;
    bool a = !(ki->dim() == k->dim() && are_isomorphic(ki, k));
    r.conclusion("(a) Ker f !~ Ker " + tag, a, "dims " + std::to_string(k->dim()) + "," + std::to_string(ki->dim()));
    bool b = !is_injective(k, sm) && !is_injective(ki, sm);
    r.conclusion("(b) non-injective kernels " + tag, b);
    bool simple = is_simple(ki);
    std::string data = "simple=" + std::string(simple ? "yes" : "no");
    bool mid_ok = false;
    auto sk = t.split(ki);
    if (!simple && sk->members.size() == 1) {
      try {
        auto s = e.almost_split_sequence_from(sk->members[0]);
        auto parts = decompose(s->seq.middle);
        mid_ok = parts.size() == 1 && parts[0].multiplicity == 1;
        data += " middle summands=" + std::to_string(t.split(s->seq.middle)->members.size());
      } catch (const ModuleError& ex) {
        data += std::string(" ") + ex.what();
      }
    }
    r.conclusion("(c) Ker " + tag + " non-simple, indecomposable middle", !simple && mid_ok, data);
  };
  for (std::size_t k1 = 0; k1 < sy->members.size(); ++k1) {
    auto y1 = c.label(sy->members[k1]);
    check_part(compose(f, sy->projections[k1]), "f1[Y1=" + y1 + "]");
    std::vector<ModulePtr<F>> rest;
    std::vector<Matrix<F>> cols;
    for (std::size_t j = 0; j < sy->members.size(); ++j) {
      if (j == k1) continue;
      rest.push_back(c.member(sy->members[j]));
      cols.push_back(sy->projections[j].matrix);
    }
    auto y2 = direct_sum(c.algebra(), rest);
    Morphism<F> p2{f.target, y2.module, Matrix<F>::hstack(t.field(), cols, f.target->dim())};
    check_part(compose(f, p2), "f2[Y1=" + y1 + "]");
  }
  r.finish();
  return r;
}

template <ExactField F>
std::vector<NamedMorphism<F>> irreducible_fleet(const RadicalTable<F>& t, const ArEngine<F>& e) {
  const auto& c = t.catalogue();
  std::vector<NamedMorphism<F>> out;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      auto irr = t.irr_space(x, y);
      for (std::size_t k = 0; k < irr.basis.size(); ++k) {
        std::string name = c.label(x) + "->" + c.label(y);
        if (irr.basis.size() > 1) name += "#" + std::to_string(k + 1);
        out.push_back({name, irr.basis[k]});
      }
    }
  for (std::size_t m = 0; m < t.size(); ++m) {
    if (e.member_projective(m)) continue;
    auto s = e.almost_split_sequence(m);
    if (t.split(s->seq.middle)->members.size() < 2) continue;
    out.push_back({"E->" + c.label(m), s->seq.project});
    out.push_back({c.label(s->left) + "->E", s->seq.inject});
  }
  for (std::size_t m = 0; m < t.size(); ++m) {
    const auto& x = c.member(m);
    if (e.member_projective(m)) {
      auto rad = module_radical(x);
      if (rad.module->dim() > 0) out.push_back({"rad(" + c.label(m) + ")->" + c.label(m), rad.inclusion});
    }
    if (e.member_injective(m)) {
      auto soc = module_socle(x);
      if (soc.module->dim() < x->dim())
        out.push_back({c.label(m) + "->" + c.label(m) + "/soc", cokernel(soc.inclusion).projection});
    }
  }
  return out;
}

template <ExactField F>
TheoremReport finite_type_report(const RadicalTable<F>& t, const ArEngine<F>& e) {
  const auto& c = t.catalogue();
  TheoremReport r{"finite-type", "catalogue", {}, Verdict::verified};
  auto fleet = irreducible_fleet(t, e);
  std::optional<std::size_t> max_epi, max_mono, max_inj, max_proj;
  std::vector<std::string> bad_b, bad_c, bad_d, bad_e;
  std::string inj_at, proj_at;
  auto bump = [](std::optional<std::size_t>& m, std::size_t v) {
    if (!m || v > *m) m = v;
  };
  for (const auto& nm : fleet) {
    const auto& f = nm.map;
    bool radical_map = nm.name.rfind("rad(", 0) == 0;
    bool socle_map = nm.name.size() > 4 && nm.name.compare(nm.name.size() - 4, 4, "/soc") == 0;
    if (is_epi(f)) {
      auto d = left_degree(t, f);
      if (!d.finite()) bad_d.push_back(nm.name);
      else bump(max_epi, *d.value);
      if (socle_map) {
        if (!d.finite()) bad_c.push_back(nm.name);
        else if (!max_inj || *d.value > *max_inj) {
          max_inj = d.value;
          inj_at = nm.name;
        }
      }
    }
    if (is_mono(f)) {
      auto d = right_degree(t, f);
      if (!d.finite()) bad_e.push_back(nm.name);
      else bump(max_mono, *d.value);
      if (radical_map) {
        if (!d.finite()) bad_b.push_back(nm.name);
        else if (!max_proj || *d.value > *max_proj) {
          max_proj = d.value;
          proj_at = nm.name;
        }
      }
    }
  }
  auto listing = [](const std::vector<std::string>& v) { return v.empty() ? std::string("none") : join(v, ","); };
  r.conclusion("(b) rad P -> P finite right degree", bad_b.empty(), "infinite: " + listing(bad_b));
  r.conclusion("(c) I -> I/soc I finite left degree", bad_c.empty(), "infinite: " + listing(bad_c));
  r.conclusion("(d) irreducible epis finite left degree", bad_d.empty(), "infinite: " + listing(bad_d));
  r.conclusion("(e) irreducible monos finite right degree", bad_e.empty(), "infinite: " + listing(bad_e));
  r.conclusion("(f) max d_l attained at I -> I/soc I", max_epi == max_inj,
               "max=" + show(max_epi) + " injective max=" + show(max_inj) + (inj_at.empty() ? "" : " at " + inj_at));
  r.conclusion("(g) max d_r attained at rad P -> P", max_mono == max_proj,
               "max=" + show(max_mono) + " projective max=" + show(max_proj) + (proj_at.empty() ? "" : " at " + proj_at));
  (void)c;
  r.finish();
  return r;
}

template <ExactField F>
TheoremReport path_composition_report(const RadicalTable<F>& t, const std::vector<Morphism<F>>& path,
                                      const std::string& name) {
  const auto& cat = t.catalogue();
  TheoremReport r{"C", name, {}, Verdict::verified};
  const std::size_t n = path.size();
  std::vector<std::size_t> verts;
  bool members_ok = n > 0;
  for (std::size_t s = 0; s < n && members_ok; ++s) {
    auto a = std::find(cat.members().begin(), cat.members().end(), path[s].source);
    auto b = std::find(cat.members().begin(), cat.members().end(), path[s].target);
    members_ok = a != cat.members().end() && b != cat.members().end();
    if (!members_ok) break;
    auto ia = static_cast<std::size_t>(a - cat.members().begin());
    if (s == 0) verts.push_back(ia);
    else members_ok = verts.back() == ia;
    verts.push_back(static_cast<std::size_t>(b - cat.members().begin()));
  }
  if (!r.hypothesis("path between members", members_ok)) return r.finish(), r;
  bool irr = true;
  for (const auto& f : path) irr = irr && t.depth(f).value == 1u && is_irreducible(t, f);
  if (!r.hypothesis("irreducible maps", irr, "path=" + path_str(t, verts))) return r.finish(), r;

  std::vector<Morphism<F>> prefix;  // prefix[s] = f_1 ... f_{s+1}
  for (std::size_t s = 0; s < n; ++s) prefix.push_back(s ? compose(prefix.back(), path[s]) : path[0]);
  auto cdepth = t.depth(prefix.back());
  const bool in_i = !cdepth.value || *cdepth.value >= n + 1;

  ChoiceCache<F> cache(t, 256);
  const std::size_t x0 = verts[0];
  bool in_ii = false, in_iii = false, unsure = false;
  bool iii_dim_one = false;
  std::string ii_data = "none", iii_data = "none";
  std::vector<DegreeReport<F>> degs;
  for (const auto& f : path) degs.push_back(left_degree(t, f));
  std::vector<std::size_t> irr_dims;
  for (std::size_t s = 0; s < n; ++s) irr_dims.push_back(t.irr_space(verts[s], verts[s + 1]).dim);

  for (std::size_t tt = 1; tt <= n; ++tt) {
    const auto& dl = degs[tt - 1];
    if (!dl.finite() || *dl.value > tt - 1) continue;
    const std::size_t d = *dl.value;
    const auto& ft = path[tt - 1];
    if (!freely_irreducible_check(t, ft)) unsure = true;
    auto ker = kernel(ft);
    auto sk = t.split(ker.module);
    const std::size_t xprev = verts[tt - 1];
    Morphism<F> c = tt == 1 ? identity_morphism(cat.member(x0)) : prefix[tt - 2];
    // (ii): h in rad^(t-1-d)(X0, K) \ rad^(t-d) with c - h i in rad^t
    {
      auto h_space = t.left_power(x0, *sk, tt - 1 - d);
      auto h_deep = t.left_power(x0, *sk, tt - d);
      const auto& hom = t.hom(x0, xprev);
      QuotientSpace<F> q(SubspaceBasis<F>::full(t.field(), hom.size()), t.power(x0, xprev, tt));
      auto target = q.coordinates(hom.coordinates(c));
      std::optional<Matrix<F>> witness;
      if (h_space.dim() > 0) {
        Matrix<F> phi(t.field(), h_space.dim(), q.dim());
        for (std::size_t b = 0; b < h_space.dim(); ++b) {
          auto h = t.left_element(x0, *sk, h_space.vector(b));
          phi.set_row(b, q.coordinates(hom.coordinates(compose(h, ker.inclusion))));
        }
        std::optional<Matrix<F>> sol;
        SubspaceBasis<F> free_part = SubspaceBasis<F>::full(t.field(), h_space.dim());
        if (q.dim() == 0) {
          sol = Matrix<F>(t.field(), 1, h_space.dim());
        } else {
          sol = solve(phi, target);
          free_part = kernel_basis(phi);
        }
        if (sol) {
          auto h0 = *sol * h_space.basis();
          if (!h_deep.contains(h0)) witness = h0;
          for (std::size_t b = 0; b < free_part.dim() && !witness; ++b) {
            auto hv = h0 + free_part.vector(b) * h_space.basis();
            if (!h_deep.contains(hv)) witness = hv;
          }
        }
      }
      if (witness && !in_ii) {
        in_ii = true;
        auto hd = left_depth(t, x0, *sk, *witness);
        ii_data = "t=" + std::to_string(tt) + " d_l(f_t)=" + std::to_string(d) + " depth h=" + hd.str();
      }
    }
    // (iii): nonzero path X0 -> Ker f_t of length t-1-d and a zero path X0 -> ... -> X_t
    if (sk->members.size() == 1) {
      const std::size_t kk = sk->members[0];
      const std::size_t len = tt - 1 - d;
      bool nonzero = false;
      for (const auto& st : nonzero_paths(t, cache, x0, len))
        if (st.vertex == kk) {
          nonzero = true;
          break;
        }
      std::vector<std::size_t> head(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(tt + 1));
      bool zero = nonzero && zero_path_along(t, cache, head);
      if (nonzero && zero) {
        bool ones = true;
        for (std::size_t s = 0; s < tt; ++s) ones = ones && irr_dims[s] == 1;
        if (!in_iii) iii_data = "t=" + std::to_string(tt) + " path to Ker length=" + std::to_string(len) +
                                " zero path " + path_str(t, head) + " exists";
        in_iii = true;
        iii_dim_one = iii_dim_one || ones;
      }
    }
  }

  std::ostringstream cd;
  cd << "composite depth=" << (cdepth.value ? std::to_string(*cdepth.value) : "inf(zero)") << " n=" << n;
  r.conclusion("(i) composite in rad^(n+1)", Status::skipped, std::string(in_i ? "yes " : "no ") + cd.str());
  r.conclusion("(ii) witness (t, h)", Status::skipped, std::string(in_ii ? "yes " : "no ") + ii_data);
  r.conclusion("(iii) paths", Status::skipped,
               std::string(in_iii ? "yes " : "no ") + iii_data + (cache.exhaustive() ? "" : " (search not exhaustive)"));
  const Status fail = unsure ? Status::inconclusive : Status::fails;
  r.conclusion("(i)<=>(ii)", in_i == in_ii ? Status::holds : fail);
  r.conclusion("(ii)=>(iii)", !in_ii || in_iii ? Status::holds : (cache.exhaustive() ? fail : Status::inconclusive));
  if (iii_dim_one)
    r.conclusion("(iii)=>(i) with dim irr = 1", in_i ? Status::holds : fail);
  else
    r.conclusion("(iii)=>(i) with dim irr = 1", Status::skipped, in_iii ? "some irr space on the path has dimension > 1"
                                                                        : "(iii) does not hold");
  // remark (1): no zero path up to X_t and d_l(f_s) >= s beyond t forces the composite out of rad^(n+1)
  {
    std::optional<std::size_t> premise;
    for (std::size_t t0 = 0; t0 <= n && !premise; ++t0) {
      bool tail = true;
      for (std::size_t s = t0 + 1; s <= n; ++s) tail = tail && (!degs[s - 1].finite() || *degs[s - 1].value >= s);
      if (!tail) continue;
      std::vector<std::size_t> head(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(t0 + 1));
      if (t0 == 0 || !zero_path_along(t, cache, head)) premise = t0;
    }
    if (!premise)
      r.conclusion("remark (1)", Status::skipped, "premise fails");
    else if (!cache.exhaustive())
      r.conclusion("remark (1)", in_i ? Status::inconclusive : Status::holds, "t=" + std::to_string(*premise));
    else
      r.conclusion("remark (1)", in_i ? fail : Status::holds, "t=" + std::to_string(*premise));
  }
  // remark (2): a zero path through the same vertices with one-dimensional irr spaces forces rad^(n+1)
  {
    bool ones = std::all_of(irr_dims.begin(), irr_dims.end(), [](std::size_t d) { return d == 1; });
    bool zero = zero_path_along(t, cache, verts);
    if (ones && zero)
      r.conclusion("remark (2)", in_i ? Status::holds : fail, "zero path exists");
    else
      r.conclusion("remark (2)", Status::skipped,
                   std::string(zero ? "zero path exists" : "no zero path") + (ones ? "" : ", some irr space has dimension > 1"));
  }
  r.finish();
  return r;
}

template <ExactField F>
std::vector<std::vector<Morphism<F>>> enumerate_paths(const RadicalTable<F>& t, std::size_t length, std::size_t limit) {
  ChoiceCache<F> cache(t, limit);
  std::vector<std::vector<Morphism<F>>> out;
  std::vector<std::pair<std::size_t, std::vector<Morphism<F>>>> layer;
  for (std::size_t x = 0; x < t.size(); ++x) layer.push_back({x, {}});
  for (std::size_t s = 0; s < length; ++s) {
    std::vector<std::pair<std::size_t, std::vector<Morphism<F>>>> next;
    for (const auto& [v, p] : layer)
      for (std::size_t w = 0; w < t.size(); ++w)
        for (const auto& u : cache.get(v, w).maps) {
          auto q = p;
          q.push_back(u);
          next.push_back({w, std::move(q)});
        }
    layer = std::move(next);
  }
  for (auto& [v, p] : layer) out.push_back(std::move(p));
  return out;
}

#define RADDEG_INSTANTIATE(F)                                                                                         \
  template DegreeReport<F> left_degree(const RadicalTable<F>&, const Morphism<F>&);                                   \
  template DegreeReport<F> right_degree(const RadicalTable<F>&, const Morphism<F>&);                                  \
  template bool is_irreducible(const RadicalTable<F>&, const Morphism<F>&);                                           \
  template bool freely_irreducible_check(const RadicalTable<F>&, const Morphism<F>&);                                 \
  template KernelGrading<F> depth_graded_kernel_decomposition(const RadicalTable<F>&, const Morphism<F>&);            \
  template IrrChoices<F> irreducible_maps(const RadicalTable<F>&, std::size_t, std::size_t, std::size_t);             \
  template KernelPath<F> find_kernel_path(const RadicalTable<F>&, const Morphism<F>&);                                \
  template TheoremReport graded_kernel_sequence_report(const RadicalTable<F>&, const Morphism<F>&, const std::string&, \
                                                       std::optional<std::size_t>, std::optional<std::size_t>);      \
  template TheoremReport theorem_b_report(const RadicalTable<F>&, const Morphism<F>&, const std::string&);            \
  template TheoremReport degree_kernel_equivalence_check(const RadicalTable<F>&, const Morphism<F>&,                  \
                                                         const std::string&);                                         \
  template TheoremReport mono_epi_degree_check(const RadicalTable<F>&, const Morphism<F>&, const std::string&);       \
  template TheoremReport degree_shift_check(const RadicalTable<F>&, const ArEngine<F>&, std::size_t);                 \
  template TheoremReport kernel_iso_check(const RadicalTable<F>&, const Morphism<F>&, const Morphism<F>&,             \
                                          const std::string&);                                                        \
  template TheoremReport kernel_comparison_check(const RadicalTable<F>&, const ArEngine<F>&, const Morphism<F>&,      \
                                                 const std::string&);                                                 \
  template std::vector<NamedMorphism<F>> irreducible_fleet(const RadicalTable<F>&, const ArEngine<F>&);               \
  template TheoremReport finite_type_report(const RadicalTable<F>&, const ArEngine<F>&);                              \
  template TheoremReport path_composition_report(const RadicalTable<F>&, const std::vector<Morphism<F>>&,             \
                                                 const std::string&);                                                 \
  template std::vector<std::vector<Morphism<F>>> enumerate_paths(const RadicalTable<F>&, std::size_t, std::size_t);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
