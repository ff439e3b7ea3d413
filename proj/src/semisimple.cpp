#include "raddeg/semisimple.hpp"

#include <algorithm>

namespace raddeg {

template <ExactField F>
SemisimpleQuotient<F> semisimple_quotient(const Algebra<F>& a, const SubspaceBasis<F>& radical) {
  const F& f = a.field();
  QuotientSpace<F> q(SubspaceBasis<F>::full(f, a.dim()), radical);
  std::size_t r = q.dim();
  Matrix<F> section = q.representatives();
  Matrix<F> table(f, r * r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      table.set_row(i * r + j, q.coordinates(a.multiply(section.row(i), section.row(j))));
  Matrix<F> unit = q.coordinates(a.unit());
  return {Algebra<F>::trusted(f, table, unit), q, section};
}

namespace {

template <ExactField F>
std::optional<Matrix<F>> idempotent_from(const Algebra<F>& b, const Matrix<F>& x, const Matrix<F>& e) {
  Poly<F> m = minimal_polynomial(b, x, e);
  auto split = coprime_split(m);
  if (!split) return std::nullopt;
  auto [g, s, t] = poly_xgcd(split->first, split->second);
  (void)s;
  Matrix<F> idem = evaluate_at(b, t * split->second, x, e);
  if (idem.is_zero() || idem == e.flattened() || !(b.multiply(idem, idem) == idem))
    throw AlgebraError("idempotent construction failed");
  return idem;
}

template <ExactField F>
bool is_idempotent(const Algebra<F>& b, const Matrix<F>& y) {
  return b.multiply(y, y) == y;
}

}  // namespace

template <ExactField F>
std::optional<Matrix<F>> split_corner(const Algebra<F>& b, const Matrix<F>& e_in) {
  const F& f = b.field();
  const Matrix<F> e = e_in.flattened();
  const std::size_t n = b.dim();
  Matrix<F> spanning(f, n, n);
  for (std::size_t i = 0; i < n; ++i) spanning.set_row(i, b.multiply(b.multiply(e, b.basis_element(i)), e));
  SubspaceBasis<F> corner = SubspaceBasis<F>::span(spanning);
  const std::size_t c = corner.dim();
  if (c <= 1) return std::nullopt;
  std::vector<Matrix<F>> cb;
  for (std::size_t i = 0; i < c; ++i) cb.push_back(corner.vector(i));

  // centre of the corner
  Matrix<F> comm(f, c, c * n);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t k = 0; k < c; ++k)
      comm.set_block(a, k * n, b.multiply(cb[a], cb[k]) - b.multiply(cb[k], cb[a]));
  auto zk = kernel_basis(comm);
  Matrix<F> zbasis = zk.basis() * corner.basis();
  const bool commutative = zbasis.rows() == c;

  std::vector<Matrix<F>> candidates;
  if constexpr (std::is_same_v<F, FiniteField>) {
    // Frobenius-fixed part of the centre: a product of copies of the ground field,
    // one per simple block
    const std::uint64_t q = f.order();
    Matrix<F> frob(f, zbasis.rows(), n);
    for (std::size_t a = 0; a < zbasis.rows(); ++a) {
      Matrix<F> z = zbasis.row(a);
      Matrix<F> zq = e;
      Matrix<F> base = z;
      for (std::uint64_t t = q; t > 0; t >>= 1) {
        if (t & 1) zq = b.multiply(zq, base);
        if (t > 1) base = b.multiply(base, base);
      }
      frob.set_row(a, zq - z);
    }
    auto fixed = kernel_basis(frob);
    Matrix<F> fixed_basis = fixed.basis() * zbasis;
    if (fixed_basis.rows() >= 2) {
      for (std::size_t a = 0; a < fixed_basis.rows(); ++a) candidates.push_back(fixed_basis.row(a));
    } else if (commutative) {
      return std::nullopt;  // a finite commutative simple algebra is a field
    }
  } else {
    for (std::size_t a = 0; a < zbasis.rows(); ++a) candidates.push_back(zbasis.row(a));
  }
  for (const auto& x : cb) candidates.push_back(x);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t k = a + 1; k < c; ++k) candidates.push_back(cb[a] + cb[k]);

  for (const auto& x : candidates)
    if (auto idem = idempotent_from(b, x, e)) return idem;

  if constexpr (std::is_same_v<F, FiniteField>) {
    // exhaustive search of the corner for y^2 = y, y not in {0, e}
    std::uint64_t q = f.order(), total = 1;
    for (std::size_t i = 0; i < c; ++i) {
      if (total > (1u << 20) / q) throw AlgebraError("corner too large for exhaustive idempotent search");
      total *= q;
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      Matrix<F> y(f, 1, n);
      std::uint64_t r = idx;
      for (std::size_t a = 0; a < c; ++a) {
        y.add_scaled(cb[a], f.element(r % q));
        r /= q;
      }
      if (!(y == e) && is_idempotent(b, y)) return y;
    }
    return std::nullopt;
  } else {
    // over Q: a commutative corner with an element whose minimal polynomial has
    // full degree <= 3 and no rational root is a field
    if (commutative && c <= 3) {
      for (const auto& x : cb) {
        Poly<F> m = minimal_polynomial(b, x, e);
        if (m.degree() == static_cast<int>(c) && rational_roots(m).empty()) return std::nullopt;
      }
    }
    throw AlgebraError("cannot decide whether a " + std::to_string(c) +
                       "-dimensional semisimple corner over Q is a division algebra");
  }
}

template <ExactField F>
std::vector<Matrix<F>> split_semisimple(const Algebra<F>& b) {
  std::vector<Matrix<F>> done;
  if (b.dim() == 0) return done;
  std::vector<Matrix<F>> work = {b.unit()};
  while (!work.empty()) {
    Matrix<F> e = work.back();
    work.pop_back();
    auto f = split_corner(b, e);
    if (!f) {
      done.push_back(e);
      continue;
    }
    work.push_back(e - *f);
    work.push_back(*f);
  }
  return done;
}

template <ExactField F>
Matrix<F> lift_idempotent(const Algebra<F>& a, Matrix<F> y) {
  const F& f = a.field();
  auto three = f.from_int(3), two = f.from_int(2);
  for (int iter = 0; iter < 200; ++iter) {
    Matrix<F> y2 = a.multiply(y, y);
    if (y2 == y) return y;
    Matrix<F> y3 = a.multiply(y2, y);
    y = y2.scaled(three) - y3.scaled(two);
  }
  throw AlgebraError("idempotent lifting did not converge");
}

template <ExactField F>
IdempotentSet<F> primitive_idempotents(const Algebra<F>& a) {
  IdempotentSet<F> out;
  if (a.dim() == 0) return out;
  auto sq = semisimple_quotient(a, a.radical());
  auto bar = split_semisimple(sq.algebra);
  // deterministic order: by the first nonzero coordinate of the lift
  auto key = [&](const Matrix<F>& b) {
    Matrix<F> v = b * sq.section;
    std::size_t first = v.cols();
    for (std::size_t j = 0; j < v.cols(); ++j)
      if (!(v.at(0, j) == a.field().zero())) {
        first = j;
        break;
      }
    return std::make_pair(first, v.to_string());
  };
  std::stable_sort(bar.begin(), bar.end(), [&](const Matrix<F>& x, const Matrix<F>& y) { return key(x) < key(y); });
  Matrix<F> used(a.field(), 1, a.dim());
  for (std::size_t i = 0; i + 1 < bar.size(); ++i) {
    Matrix<F> u = a.unit() - used;
    Matrix<F> y = a.multiply(a.multiply(u, bar[i] * sq.section), u);
    Matrix<F> e = lift_idempotent(a, y);
    out.elements.push_back(e);
    used += e;
  }
  out.elements.push_back(a.unit() - used);
  return out;
}

template <ExactField F>
bool is_local(const Algebra<F>& a) {
  if (a.dim() == 0) return false;
  auto sq = semisimple_quotient(a, a.radical());
  return !split_corner(sq.algebra, sq.algebra.unit()).has_value();
}

#define RADDEG_INSTANTIATE(F)                                                                      \
  template SemisimpleQuotient<F> semisimple_quotient(const Algebra<F>&, const SubspaceBasis<F>&);  \
  template std::optional<Matrix<F>> split_corner(const Algebra<F>&, const Matrix<F>&);             \
  template std::vector<Matrix<F>> split_semisimple(const Algebra<F>&);                             \
  template Matrix<F> lift_idempotent(const Algebra<F>&, Matrix<F>);                                \
  template IdempotentSet<F> primitive_idempotents(const Algebra<F>&);                              \
  template bool is_local(const Algebra<F>&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
