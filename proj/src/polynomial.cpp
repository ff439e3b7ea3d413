#include "raddeg/polynomial.hpp"

#include <algorithm>

#include "raddeg/matrix.hpp"
#include "raddeg/subspace.hpp"

namespace raddeg {

namespace {

using FP = Poly<FiniteField>;

// f = g(x^p); returns the p-th root of f
FP pth_root(const FP& f) {
  const auto& F = f.field();
  std::uint64_t inv_frob = F.order() / F.characteristic();  // c -> c^(q/p) undoes c -> c^p
  std::vector<FiniteField::Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += F.characteristic())
    r.push_back(F.pow(f.coeffs()[i], inv_frob));
  return FP(F, r);
}

FP squarefree_part(const FP& f) {
  if (f.degree() < 1) return FP::constant(f.field(), f.field().one());
  FP d = f.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(f));
  FP g = poly_gcd(f, d);
  FP w = f / g;
  FP rest = g;
  while (true) {
    FP c = poly_gcd(rest, w);
    if (c.degree() < 1) break;
    rest = rest / c;
  }
  FP tail = squarefree_part(rest.degree() < 1 ? rest : pth_root(rest.monic()));
  return (w * tail).monic();
}

bool poly_less(const FP& a, const FP& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace

std::vector<Poly<FiniteField>> distinct_irreducible_factors(const Poly<FiniteField>& m) {
  const FiniteField& F = m.field();
  FP r = squarefree_part(m.monic());
  std::size_t n = r.degree() < 0 ? 0 : static_cast<std::size_t>(r.degree());
  if (n == 0) return {};
  if (n == 1) return {r};
  // Berlekamp subalgebra: kernel of Q - I, Q rows = x^(i q) mod r
  Matrix<FiniteField> Q(F, n, n);
  FP xq = poly_powmod(FP::x(F), F.order(), r);
  FP row = FP::constant(F, F.one());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) Q.at(i, j) = row.coeff(j);
    row = (row * xq) % r;
  }
  auto ker = kernel_basis(Q - Matrix<FiniteField>::identity(F, n));
  std::size_t count = ker.dim();
  std::vector<FP> factors = {r};
  if (count > 1) {
    if (F.order() > (1u << 20)) throw FieldError("field too large for Berlekamp enumeration");
    for (std::size_t b = 0; b < ker.dim() && factors.size() < count; ++b) {
      std::vector<FiniteField::Elem> cs(n);
      for (std::size_t j = 0; j < n; ++j) cs[j] = ker.basis().at(b, j);
      FP v(F, cs);
      if (v.degree() < 1) continue;
      std::vector<FP> next;
      for (const auto& g : factors) {
        if (g.degree() == 1) {
          next.push_back(g);
          continue;
        }
        FP rest = g;
        for (std::uint64_t c = 0; c < F.order() && rest.degree() > 0; ++c) {
          FP h = poly_gcd(rest, v - FP::constant(F, F.element(c)));
          if (h.degree() >= 1 && h.degree() < rest.degree()) {
            next.push_back(h);
            rest = rest / h;
          } else if (h.degree() == rest.degree()) {
            break;
          }
        }
        if (rest.degree() > 0) next.push_back(rest.monic());
      }
      factors = std::move(next);
    }
  }
  for (auto& g : factors) g = g.monic();
  std::sort(factors.begin(), factors.end(), poly_less);
  return factors;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > mpz_class("1000000000000")) return out;  // too big to scan; roots are then not reported
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const Poly<Rationals>& m) {
  std::vector<mpq_class> roots;
  if (m.degree() < 1) return roots;
  // integer coefficients
  mpz_class lcm = 1;
  for (const auto& c : m.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : m.coeffs()) a.push_back(mpz_class(c * lcm));
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<mpz_class> b(a.begin() + low, a.end());
  if (b.size() >= 2) {
    auto ps = divisors(b.front()), qs = divisors(b.back());
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int s : {1, -1}) {
          mpq_class cand(s * p, q);
          cand.canonicalize();
          if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
          if (sgn(m.evaluate(cand)) == 0) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace raddeg
