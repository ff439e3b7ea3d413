#pragma once

// Brute-force radical powers, computed without the recursive table: the
// radical of End(X) is spanned by its non-invertible elements (finite
// fields) or is the trace-zero part (rationals, where every End(X) in the
// fixtures has residue field Q), and rad^m is the span of all composites
// of irreducible-basis paths of length at least m.

#include <functional>
#include <vector>

#include "helpers.hpp"

namespace oracle {

using namespace raddeg;

template <class F>
struct Brute {
  std::vector<ModulePtr<F>> mods;
  std::vector<std::vector<HomBasis<F>>> hom;
  std::vector<std::vector<std::vector<Matrix<F>>>> irr;  // matrices
  std::vector<std::vector<std::vector<SubspaceBasis<F>>>> powers;  // [m][x][y], in flattened matrices
};

template <class F>
SubspaceBasis<F> span_flat(const F& f, const std::vector<Matrix<F>>& mats, std::size_t len) {
  std::vector<Matrix<F>> rows;
  for (const auto& m : mats) rows.push_back(m.flattened());
  return SubspaceBasis<F>::span(Matrix<F>::vstack(f, rows, len));
}

inline SubspaceBasis<FiniteField> end_radical(const HomBasis<FiniteField>& h) {
  const auto& f = h.source()->field();
  std::size_t n = h.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f.order();
  std::vector<Matrix<FiniteField>> non_inv;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix<FiniteField> c(f, 1, n);
    std::size_t r = code;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = f.element(r % f.order());
      r /= f.order();
    }
    auto m = h.element(c).matrix;
    if (rank(m) < m.rows()) non_inv.push_back(m);
  }
  std::size_t len = h.source()->dim() * h.source()->dim();
  return span_flat(f, non_inv, len);
}

inline SubspaceBasis<Rationals> end_radical(const HomBasis<Rationals>& h) {
  const auto& f = h.source()->field();
  std::vector<Matrix<Rationals>> zero_trace;
  auto ms = h.morphisms();
  std::size_t d = h.source()->dim();
  auto trace = [&](const Matrix<Rationals>& m) {
    mpq_class t = 0;
    for (std::size_t i = 0; i < d; ++i) t += m.at(i, i);
    return t;
  };
  std::size_t pivot = ms.size();
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (trace(ms[i].matrix) != 0) {
      pivot = i;
      break;
    }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i == pivot) continue;
    auto m = ms[i].matrix;
    if (pivot < ms.size()) m = m - ms[pivot].matrix.scaled(mpq_class(trace(m) / trace(ms[pivot].matrix)));
    zero_trace.push_back(m);
  }
  return span_flat(f, zero_trace, d * d);
}

template <class F>
Brute<F> brute_powers(const F& f, const std::vector<ModulePtr<F>>& mods) {
  Brute<F> b;
  b.mods = mods;
  const std::size_t k = mods.size();
  b.hom.assign(k, std::vector<HomBasis<F>>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) b.hom[x][y] = hom_basis(mods[x], mods[y]);
  auto len = [&](std::size_t x, std::size_t y) { return mods[x]->dim() * mods[y]->dim(); };
  std::vector<std::vector<SubspaceBasis<F>>> rad(k, std::vector<SubspaceBasis<F>>(k));
  std::vector<std::vector<std::vector<Matrix<F>>>> rad_mats(k, std::vector<std::vector<Matrix<F>>>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y) {
        rad[x][y] = end_radical(b.hom[x][y]);
        for (std::size_t i = 0; i < rad[x][y].dim(); ++i)
          rad_mats[x][y].push_back(rad[x][y].vector(i).reshaped(mods[x]->dim(), mods[y]->dim()));
      } else {
        std::vector<Matrix<F>> ms;
        for (const auto& m : b.hom[x][y].morphisms()) ms.push_back(m.matrix);
        rad_mats[x][y] = ms;
        rad[x][y] = span_flat(f, ms, len(x, y));
      }
    }
  // irr representatives: rad modulo sum of rad o rad
  b.irr.assign(k, std::vector<std::vector<Matrix<F>>>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<Matrix<F>> sq;
      for (std::size_t z = 0; z < k; ++z)
        for (const auto& u : rad_mats[x][z])
          for (const auto& v : rad_mats[z][y]) sq.push_back(u * v);
      auto r2 = span_flat(f, sq, len(x, y));
      QuotientSpace<F> q(rad[x][y], r2);
      for (std::size_t i = 0; i < q.dim(); ++i)
        b.irr[x][y].push_back(q.representative(i).reshaped(mods[x]->dim(), mods[y]->dim()));
    }
  // all nonzero composites of irr paths, grouped by length
  std::vector<std::vector<std::vector<std::vector<Matrix<F>>>>> by_len;  // [len][x][y]
  std::function<void(std::size_t, std::size_t, const Matrix<F>&, std::size_t)> walk =
      [&](std::size_t x0, std::size_t cur, const Matrix<F>& comp, std::size_t l) {
        if (by_len.size() <= l) by_len.resize(l + 1, std::vector<std::vector<std::vector<Matrix<F>>>>(k, std::vector<std::vector<Matrix<F>>>(k)));
        by_len[l][x0][cur].push_back(comp);
        for (std::size_t y = 0; y < k; ++y)
          for (const auto& g : b.irr[cur][y]) {
            auto next = comp * g;
            if (!next.is_zero()) walk(x0, y, next, l + 1);
          }
      };
  for (std::size_t x = 0; x < k; ++x) walk(x, x, Matrix<F>::identity(f, mods[x]->dim()), 0);
  // rad^m = span of paths of length >= m; rad^0 = Hom
  const std::size_t L = by_len.size();
  for (std::size_t m = 0; m <= L; ++m) {
    std::vector<std::vector<SubspaceBasis<F>>> level(k, std::vector<SubspaceBasis<F>>(k));
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        std::vector<Matrix<F>> ms;
        if (m == 0)
          for (const auto& h : b.hom[x][y].morphisms()) ms.push_back(h.matrix);
        for (std::size_t l = std::max<std::size_t>(m, 1); l < L; ++l)
          for (const auto& c : by_len[l][x][y]) ms.push_back(c);
        level[x][y] = span_flat(f, ms, len(x, y));
      }
    b.powers.push_back(level);
  }
  return b;
}

}  // namespace oracle
