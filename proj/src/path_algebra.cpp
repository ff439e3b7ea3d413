#include "raddeg/path_algebra.hpp"

#include <algorithm>

namespace raddeg {

std::optional<std::size_t> QuiverPresentation::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> QuiverPresentation::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

std::string path_name(const QuiverPresentation& q, const QuiverPath& p) {
  if (p.arrows.empty()) return "e" + q.vertices[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

namespace {

struct PathIndex {
  std::vector<QuiverPath> paths;
  std::map<QuiverPath, std::size_t> index;
};

PathIndex enumerate_paths(const QuiverPresentation& q, std::size_t max_len) {
  PathIndex pi;
  std::vector<QuiverPath> layer;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) layer.push_back({v, v, {}});
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<QuiverPath> next;
    for (const auto& p : layer) {
      pi.index[p] = pi.paths.size();
      pi.paths.push_back(p);
      if (pi.paths.size() > kPathCap)
        throw ResourceError("path enumeration exceeds " + std::to_string(kPathCap) + " paths");
      if (len == max_len) continue;
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != p.target) continue;
        QuiverPath e = p;
        e.arrows.push_back(a);
        e.target = q.arrows[a].target;
        next.push_back(e);
      }
    }
    layer = std::move(next);
  }
  return pi;
}

QuiverPath concat(const QuiverPath& a, const QuiverPath& b) {
  QuiverPath r{a.source, b.target, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

struct CheckedRelation {
  std::size_t source, target, max_len;
  std::vector<std::pair<long long, QuiverPath>> terms;
};

std::vector<CheckedRelation> check_relations(const QuiverPresentation& q) {
  std::vector<CheckedRelation> out;
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    const auto& rel = q.relations[r];
    if (rel.empty()) throw NotAdmissible("relation " + std::to_string(r) + " is empty", static_cast<int>(r));
    CheckedRelation cr{0, 0, 0, {}};
    for (std::size_t t = 0; t < rel.size(); ++t) {
      const auto& term = rel[t];
      if (term.arrows.size() < 2)
        throw NotAdmissible("relation " + std::to_string(r) + " has a term of length < 2", static_cast<int>(r));
      QuiverPath p{q.arrows.at(term.arrows[0]).source, 0, term.arrows};
      std::size_t at = p.source;
      for (auto a : term.arrows) {
        if (a >= q.arrows.size() || q.arrows[a].source != at)
          throw NotAdmissible("relation " + std::to_string(r) + " has a non-composable term", static_cast<int>(r));
        at = q.arrows[a].target;
      }
      p.target = at;
      if (t == 0) {
        cr.source = p.source;
        cr.target = p.target;
      } else if (p.source != cr.source || p.target != cr.target) {
        throw NotAdmissible("relation " + std::to_string(r) + " mixes non-parallel paths", static_cast<int>(r));
      }
      cr.max_len = std::max(cr.max_len, p.length());
      cr.terms.emplace_back(term.coefficient, p);
    }
    out.push_back(cr);
  }
  return out;
}

// span of u r v over all relations r and paths u, v, dropping terms longer than max_len
// (or refusing generators that would need dropping when strict)
template <ExactField F>
SubspaceBasis<F> ideal_span(const F& field, const QuiverPresentation& q, const std::vector<CheckedRelation>& rels,
                            const PathIndex& pi, const std::vector<std::size_t>& column_of, std::size_t ncols,
                            std::size_t max_len, bool strict) {
  std::vector<Matrix<F>> rows;
  for (const auto& rel : rels) {
    for (const auto& u : pi.paths) {
      if (u.target != rel.source) continue;
      for (const auto& v : pi.paths) {
        if (v.source != rel.target) continue;
        if (strict && u.length() + v.length() + rel.max_len > max_len) continue;
        Matrix<F> row(field, 1, ncols);
        bool any = false;
        for (const auto& [c, t] : rel.terms) {
          QuiverPath w = concat(concat(u, t), v);
          if (w.length() > max_len) continue;
          auto it = pi.index.find(w);
          std::size_t col = column_of[it->second];
          row[col] = field.add(row[col], field.from_int(c));
          any = true;
        }
        if (any && !row.is_zero()) rows.push_back(row);
      }
    }
  }
  (void)q;
  return SubspaceBasis<F>::span(Matrix<F>::vstack(field, rows, ncols));
}

}  // namespace

template <ExactField F>
PathAlgebra<F> from_path_algebra(const F& field, const QuiverPresentation& q) {
  const std::size_t N = q.nilpotency_cap;
  if (q.vertices.empty()) throw AlgebraError("quiver has no vertices");
  if (N < 1) throw NotAdmissible("nilpotency cap must be at least 1");
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw AlgebraError("arrow " + a.name + " has an unknown endpoint");
  auto rels = check_relations(q);
  std::size_t maxrel = 0;
  for (const auto& r : rels) maxrel = std::max(maxrel, r.max_len);

  // phase 1: every path of length N must lie in the ideal (no truncation)
  {
    std::size_t L = N + maxrel;
    PathIndex pi = enumerate_paths(q, L);
    std::vector<std::size_t> column_of(pi.paths.size());
    for (std::size_t i = 0; i < pi.paths.size(); ++i) column_of[i] = i;
    bool has_long = false;
    for (const auto& p : pi.paths) has_long = has_long || p.length() == N;
    if (has_long) {
      if (rels.empty()) throw NotAdmissible("paths of length " + std::to_string(N) + " survive without relations");
      auto ideal = ideal_span(field, q, rels, pi, column_of, pi.paths.size(), L, true);
      for (std::size_t i = 0; i < pi.paths.size(); ++i) {
        if (pi.paths[i].length() != N) continue;
        if (!ideal.contains(Matrix<F>::unit_vector(field, pi.paths.size(), i)))
          throw NotAdmissible("path " + path_name(q, pi.paths[i]) + " of length " + std::to_string(N) +
                              " is not in the ideal");
      }
    }
  }

  // phase 2: truncate at length N - 1
  PathIndex pi = enumerate_paths(q, N - 1);
  const std::size_t np = pi.paths.size();
  std::vector<std::size_t> order(np);
  for (std::size_t i = 0; i < np; ++i) order[i] = i;
  // longest paths first so that pivots (eliminated paths) are as long as possible
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pi.paths[a].length() != pi.paths[b].length()) return pi.paths[a].length() > pi.paths[b].length();
    return pi.paths[a] < pi.paths[b];
  });
  std::vector<std::size_t> column_of(np);
  for (std::size_t c = 0; c < np; ++c) column_of[order[c]] = c;
  auto ideal = ideal_span(field, q, rels, pi, column_of, np, N - 1, false);
  std::vector<bool> pivot(np, false);
  for (auto c : ideal.pivots()) pivot[c] = true;

  std::vector<std::size_t> basis_path_ids;
  for (std::size_t i = 0; i < np; ++i)
    if (!pivot[column_of[i]]) basis_path_ids.push_back(i);
  std::stable_sort(basis_path_ids.begin(), basis_path_ids.end(), [&](std::size_t a, std::size_t b) {
    if (pi.paths[a].length() != pi.paths[b].length()) return pi.paths[a].length() < pi.paths[b].length();
    return pi.paths[a] < pi.paths[b];
  });
  const std::size_t d = basis_path_ids.size();
  std::vector<std::size_t> basis_of_column(np, d);
  for (std::size_t b = 0; b < d; ++b) basis_of_column[column_of[basis_path_ids[b]]] = b;

  auto reduce_path = [&](const QuiverPath& w) {
    Matrix<F> coords(field, 1, d);
    if (w.length() >= N) return coords;
    Matrix<F> v = Matrix<F>::unit_vector(field, np, column_of[pi.index.at(w)]);
    Matrix<F> r = ideal.reduce(v);
    for (std::size_t c = 0; c < np; ++c)
      if (!field.is_zero(r[c])) coords[basis_of_column[c]] = r[c];
    return coords;
  };

  PathAlgebra<F> out;
  out.presentation = q;
  for (auto id : basis_path_ids) out.basis_paths.push_back(pi.paths[id]);
  Matrix<F> table(field, d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& a = out.basis_paths[i];
      const auto& b = out.basis_paths[j];
      if (a.target != b.source) continue;
      table.set_row(i * d + j, reduce_path(concat(a, b)));
    }
  Matrix<F> unit(field, 1, d);
  out.vertex_basis.resize(q.vertices.size());
  out.arrow_basis.assign(q.arrows.size(), std::nullopt);
  for (std::size_t b = 0; b < d; ++b) {
    const auto& p = out.basis_paths[b];
    if (p.length() == 0) {
      out.vertex_basis[p.source] = b;
      unit[b] = field.one();
    } else if (p.length() == 1) {
      out.arrow_basis[p.arrows[0]] = b;
    }
  }
  out.algebra = std::make_shared<const Algebra<F>>(Algebra<F>::from_structure_constants(field, table, unit));
  return out;
}

template PathAlgebra<FiniteField> from_path_algebra(const FiniteField&, const QuiverPresentation&);
template PathAlgebra<Rationals> from_path_algebra(const Rationals&, const QuiverPresentation&);

}  // namespace raddeg
