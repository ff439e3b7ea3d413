#pragma once

#include <memory>
#include <vector>

#include "raddeg/decompose.hpp"
#include "raddeg/fleet.hpp"
#include "raddeg/module.hpp"
#include "raddeg/path_algebra.hpp"

namespace testutil {

using namespace raddeg;

inline FiniteField gf(int p, int k = 1) { return FiniteField(FieldSpec::prime_power(p, k)); }

template <class F>
Matrix<F> mat(const F& f, std::vector<std::vector<long long>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix<F> m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.from_int(rows[r][c]);
  return m;
}

template <class F>
PathAlgebra<F> loop_algebra(const F& f, std::size_t n) {
  return from_path_algebra(f, truncated_loop(n));
}

template <class F>
PathAlgebra<F> a_algebra(const F& f, std::size_t n, std::vector<bool> forward = {}) {
  if (forward.empty()) forward.assign(n - 1, true);
  return from_path_algebra(f, type_a(n, forward));
}

// M_i = k[x]/(x^i) as a module over k[x]/(x^n), x acting by the shift
template <class F>
ModulePtr<F> uniserial(const PathAlgebra<F>& pa, std::size_t i) {
  const F& f = pa.algebra->field();
  Matrix<F> x(f, i, i);
  for (std::size_t r = 0; r + 1 < i; ++r) x.at(r, r + 1) = f.one();
  if (pa.presentation.arrows.empty()) return representation_module(pa, {i}, {});
  return representation_module(pa, {i}, {x});
}

// interval module [lo, hi] (1-based vertices) of an A_n quiver
template <class F>
ModulePtr<F> interval(const PathAlgebra<F>& pa, std::size_t lo, std::size_t hi) {
  const F& f = pa.algebra->field();
  std::size_t n = pa.presentation.vertices.size();
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t v = lo; v <= hi; ++v) dims[v - 1] = 1;
  std::vector<Matrix<F>> maps;
  for (const auto& a : pa.presentation.arrows) {
    Matrix<F> m(f, dims[a.source], dims[a.target]);
    if (dims[a.source] && dims[a.target]) m.at(0, 0) = f.one();
    maps.push_back(m);
  }
  return representation_module(pa, dims, maps);
}

inline AlgebraPtr<FiniteField> species_ptr() {
  return std::make_shared<const Algebra<FiniteField>>(species_algebra());
}

}  // namespace testutil
