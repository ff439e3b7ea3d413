#include "raddeg/radical.hpp"

#include <cstdlib>

namespace raddeg {

std::size_t nilpotency_cap_from_env() {
  const char* s = std::getenv("RADDEG_CAP");
  if (!s || !*s) return kDefaultCap;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v < 1) throw std::invalid_argument(std::string("RADDEG_CAP must be a positive integer, got ") + s);
  return static_cast<std::size_t>(v);
}

template <ExactField F>
RadicalTablePtr<F> RadicalTable<F>::build(std::shared_ptr<const Catalogue<F>> c, std::size_t cap) {
  std::shared_ptr<RadicalTable<F>> t(new RadicalTable<F>());
  t->catalogue_ = std::move(c);
  const auto& cat = *t->catalogue_;
  const std::size_t k = cat.size();
  const F& f = cat.field();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) t->hom_.push_back(hom_basis(cat.member(x), cat.member(y)));

  std::vector<SubspaceBasis<F>> full, rad1;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const auto& h = t->hom(x, y);
      full.push_back(SubspaceBasis<F>::full(f, h.size()));
      if (x != y) {
        rad1.push_back(full.back());
        continue;
      }
      auto end = endo_algebra(cat.member(x));
      rad1.push_back(end.algebra->radical());
      t->kappa_.push_back(h.size() - rad1.back().dim());
    }
  t->powers_.push_back(full);
  t->powers_.push_back(rad1);

  // radical basis morphisms, reused at every level
  std::vector<std::vector<Matrix<F>>> rad_mats(k * k);
  for (std::size_t p = 0; p < k * k; ++p)
    for (std::size_t i = 0; i < rad1[p].dim(); ++i) rad_mats[p].push_back(t->hom_[p].element(rad1[p].vector(i)).matrix);

  auto all_zero = [&](const std::vector<SubspaceBasis<F>>& level) {
    for (const auto& s : level)
      if (s.dim()) return false;
    return true;
  };
  std::size_t n = 1;
  while (!all_zero(t->powers_[n])) {
    if (n >= cap)
      throw RepInfiniteSuspected("rad^" + std::to_string(cap) + " is still nonzero; raise RADDEG_CAP or check the catalogue");
    std::vector<SubspaceBasis<F>> next;
    const auto& cur = t->powers_[n];
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        const auto& hxy = t->hom(x, y);
        std::vector<Matrix<F>> rows;
        for (std::size_t z = 0; z < k; ++z) {
          const auto& left = cur[x * k + z];
          const auto& right = rad_mats[z * k + y];
          if (!left.dim() || right.empty()) continue;
          for (std::size_t i = 0; i < left.dim(); ++i) {
            auto u = t->hom(x, z).element(left.vector(i)).matrix;
            for (const auto& v : right) rows.push_back(hxy.coordinates(u * v));
          }
        }
        next.push_back(SubspaceBasis<F>::span(Matrix<F>::vstack(f, rows, hxy.size())));
      }
    t->powers_.push_back(std::move(next));
    ++n;
  }
  t->n_ = n;
  return t;
}

template <ExactField F>
const SubspaceBasis<F>& RadicalTable<F>::power(std::size_t x, std::size_t y, std::size_t n) const {
  if (n >= powers_.size()) n = powers_.size() - 1;  // the last level is zero
  return powers_[n][x * size() + y];
}

template <ExactField F>
Depth RadicalTable<F>::member_depth(std::size_t x, std::size_t y, const Matrix<F>& coords) const {
  if (coords.is_zero()) return {};
  std::size_t d = 0;
  while (d + 1 < n_ && power(x, y, d + 1).contains(coords)) ++d;
  return {d};
}

template <ExactField F>
std::shared_ptr<const EndpointSplit<F>> RadicalTable<F>::split(const ModulePtr<F>& m) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = splits_.find(m.get());
    if (it != splits_.end()) return it->second;
  }
  auto s = std::make_shared<EndpointSplit<F>>();
  s->module = m;
  const auto& cat = *catalogue_;
  bool direct = false;
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat.member(i) == m) {
      s->members = {i};
      s->inclusions = {identity_morphism(m)};
      s->projections = {identity_morphism(m)};
      direct = true;
      break;
    }
  if (!direct && m->dim() > 0) {
    struct Piece {
      std::size_t member;
      Morphism<F> incl, proj;
    };
    std::vector<Piece> pieces;
    for (const auto& part : decompose(m)) {
      auto hit = cat.match_with_iso(part.module);
      if (!hit) throw ModuleError("a summand of dimension " + std::to_string(part.module->dim()) + " matches no catalogue member");
      const auto& iso = hit->second;  // part -> member
      Morphism<F> inv{iso.target, iso.source, *inverse(iso.matrix)};
      for (std::size_t c = 0; c < part.multiplicity; ++c)
        pieces.push_back({hit->first, compose(inv, part.inclusions[c]), compose(part.projections[c], iso)});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.member < b.member; });
    for (auto& p : pieces) {
      s->members.push_back(p.member);
      s->inclusions.push_back(std::move(p.incl));
      s->projections.push_back(std::move(p.proj));
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = splits_.emplace(m.get(), s);
  return it->second;
}

template <ExactField F>
Depth RadicalTable<F>::depth(const Morphism<F>& f) const {
  auto sa = split(f.source), sb = split(f.target);
  Depth best;
  for (std::size_t i = 0; i < sa->members.size(); ++i) {
    auto fi = compose(sa->inclusions[i], f);
    for (std::size_t j = 0; j < sb->members.size(); ++j) {
      auto c = compose(fi, sb->projections[j]);
      std::size_t x = sa->members[i], y = sb->members[j];
      Depth d = member_depth(x, y, hom(x, y).coordinates(c));
      if (d.value && (!best.value || *d.value < *best.value)) best = d;
    }
  }
  return best;
}

template <ExactField F>
Matrix<F> RadicalTable<F>::left_coords(std::size_t z, const Morphism<F>& g, const EndpointSplit<F>& sx) const {
  std::vector<Matrix<F>> parts;
  for (std::size_t j = 0; j < sx.members.size(); ++j)
    parts.push_back(hom(z, sx.members[j]).coordinates(compose(g, sx.projections[j])));
  return Matrix<F>::hstack(field(), parts, 1);
}

template <ExactField F>
Morphism<F> RadicalTable<F>::left_element(std::size_t z, const EndpointSplit<F>& sx, const Matrix<F>& coords) const {
  Morphism<F> out = zero_morphism(catalogue_->member(z), sx.module);
  std::size_t off = 0;
  for (std::size_t j = 0; j < sx.members.size(); ++j) {
    const auto& h = hom(z, sx.members[j]);
    auto c = coords.block(0, off, 1, h.size());
    off += h.size();
    if (c.is_zero()) continue;
    out = out + compose(h.element(c), sx.inclusions[j]);
  }
  return out;
}

namespace {

template <ExactField F>
SubspaceBasis<F> block_sum(const F& f, const std::vector<const SubspaceBasis<F>*>& blocks) {
  std::size_t total = 0;
  for (auto b : blocks) total += b->ambient();
  std::vector<Matrix<F>> rows;
  std::size_t off = 0;
  for (auto b : blocks) {
    for (std::size_t i = 0; i < b->dim(); ++i) {
      Matrix<F> r(f, 1, total);
      r.set_block(0, off, b->vector(i));
      rows.push_back(r);
    }
    off += b->ambient();
  }
  return SubspaceBasis<F>::span(Matrix<F>::vstack(f, rows, total));
}

}  // namespace

template <ExactField F>
SubspaceBasis<F> RadicalTable<F>::left_power(std::size_t z, const EndpointSplit<F>& sx, std::size_t n) const {
  std::vector<const SubspaceBasis<F>*> blocks;
  for (auto m : sx.members) blocks.push_back(&power(z, m, n));
  return block_sum(field(), blocks);
}

template <ExactField F>
Matrix<F> RadicalTable<F>::right_coords(const EndpointSplit<F>& sy, std::size_t z, const Morphism<F>& h) const {
  std::vector<Matrix<F>> parts;
  for (std::size_t j = 0; j < sy.members.size(); ++j)
    parts.push_back(hom(sy.members[j], z).coordinates(compose(sy.inclusions[j], h)));
  return Matrix<F>::hstack(field(), parts, 1);
}

template <ExactField F>
Morphism<F> RadicalTable<F>::right_element(const EndpointSplit<F>& sy, std::size_t z, const Matrix<F>& coords) const {
  Morphism<F> out = zero_morphism(sy.module, catalogue_->member(z));
  std::size_t off = 0;
  for (std::size_t j = 0; j < sy.members.size(); ++j) {
    const auto& hb = hom(sy.members[j], z);
    auto c = coords.block(0, off, 1, hb.size());
    off += hb.size();
    if (c.is_zero()) continue;
    out = out + compose(sy.projections[j], hb.element(c));
  }
  return out;
}

template <ExactField F>
SubspaceBasis<F> RadicalTable<F>::right_power(const EndpointSplit<F>& sy, std::size_t z, std::size_t n) const {
  std::vector<const SubspaceBasis<F>*> blocks;
  for (auto m : sy.members) blocks.push_back(&power(m, z, n));
  return block_sum(field(), blocks);
}

template <ExactField F>
IrrSpace<F> RadicalTable<F>::irr_space(std::size_t x, std::size_t y) const {
  IrrSpace<F> s;
  s.source = x;
  s.target = y;
  QuotientSpace<F> q(power(x, y, 1), power(x, y, 2));
  s.dim = q.dim();
  for (std::size_t i = 0; i < q.dim(); ++i) s.basis.push_back(hom(x, y).element(q.representative(i)));
  s.a = s.dim / kappa_[x];
  s.b = s.dim / kappa_[y];
  return s;
}

template <ExactField F>
QuotientSpace<F> RadicalTable<F>::left_graded(std::size_t z, const EndpointSplit<F>& sx, std::size_t l) const {
  return QuotientSpace<F>(left_power(z, sx, l), left_power(z, sx, l + 1));
}

template <ExactField F>
GradedMap<F> RadicalTable<F>::graded_map_left(const Morphism<F>& f, std::size_t d, std::size_t z, std::size_t l) const {
  auto sx = split(f.source), sy = split(f.target);
  GradedMap<F> g{left_graded(z, *sx, l), QuotientSpace<F>(left_power(z, *sy, l + d), left_power(z, *sy, l + d + 1)),
                 Matrix<F>(field(), 0, 0)};
  g.matrix = Matrix<F>(field(), g.source.dim(), g.target.dim());
  for (std::size_t i = 0; i < g.source.dim(); ++i) {
    auto u = left_element(z, *sx, g.source.representative(i));
    auto c = left_coords(z, compose(u, f), *sy);
    if (!left_power(z, *sy, l + d).contains(c))
      throw std::logic_error("graded_map_left: morphism is not of the stated depth");
    g.matrix.set_row(i, g.target.coordinates(c));
  }
  return g;
}

template <ExactField F>
GradedMap<F> RadicalTable<F>::graded_map_right(const Morphism<F>& f, std::size_t d, std::size_t z, std::size_t l) const {
  auto sx = split(f.source), sy = split(f.target);
  GradedMap<F> g{QuotientSpace<F>(right_power(*sy, z, l), right_power(*sy, z, l + 1)),
                 QuotientSpace<F>(right_power(*sx, z, l + d), right_power(*sx, z, l + d + 1)), Matrix<F>(field(), 0, 0)};
  g.matrix = Matrix<F>(field(), g.source.dim(), g.target.dim());
  for (std::size_t i = 0; i < g.source.dim(); ++i) {
    auto h = right_element(*sy, z, g.source.representative(i));
    auto c = right_coords(*sx, z, compose(f, h));
    if (!right_power(*sx, z, l + d).contains(c))
      throw std::logic_error("graded_map_right: morphism is not of the stated depth");
    g.matrix.set_row(i, g.target.coordinates(c));
  }
  return g;
}

template class RadicalTable<FiniteField>;
template class RadicalTable<Rationals>;

}  // namespace raddeg
