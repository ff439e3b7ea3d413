#pragma once

#include <optional>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "raddeg/field.hpp"

namespace raddeg {

// Univariate polynomial, constant term first, no trailing zeros.
template <ExactField F>
class Poly {
 public:
  using Elem = typename F::Elem;

  Poly() = default;
  explicit Poly(const F& field) : f_(field) {}
  Poly(const F& field, std::vector<Elem> coeffs) : f_(field), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, const Elem& a) { return Poly(field, {a}); }
  static Poly x(const F& field) { return Poly(field, {field.zero(), field.one()}); }
  // x - a
  static Poly linear(const F& field, const Elem& a) { return Poly(field, {field.neg(a), field.one()}); }

  const F& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && f_.is_one(c_[0]); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  Elem lead() const { return c_.empty() ? f_.zero() : c_.back(); }

  Poly monic() const {
    if (c_.empty()) return *this;
    auto inv = f_.inv(c_.back());
    Poly r = *this;
    for (auto& a : r.c_) a = f_.mul(a, inv);
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly(f_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, f_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (f_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
  }
  Poly scaled(const Elem& s) const {
    Poly r = *this;
    for (auto& a : r.c_) a = f_.mul(a, s);
    r.trim();
    return r;
  }

  // quotient and remainder
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    Poly rem = *this;
    std::vector<Elem> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, f_.zero());
    auto linv = f_.inv(d.lead());
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      std::size_t shift = rem.degree() - d.degree();
      auto c = f_.mul(rem.lead(), linv);
      q[shift] = c;
      for (std::size_t i = 0; i < d.c_.size(); ++i)
        rem.c_[shift + i] = f_.sub(rem.c_[shift + i], f_.mul(c, d.c_[i]));
      rem.trim();
    }
    return {Poly(f_, std::move(q)), rem};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Elem> r(c_.size() - 1, f_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<long long>(i)));
    return Poly(f_, std::move(r));
  }

  Elem evaluate(const Elem& a) const {
    Elem r = f_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, a), c_[i]);
    return r;
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!f_.equal(c_[i], o.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
  }

  F f_{};
  std::vector<Elem> c_;
};

template <ExactField F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// g = s a + t b with g monic
template <ExactField F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(f, f.one()), s1(f);
  Poly<F> t0(f), t1 = Poly<F>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <ExactField F>
Poly<F> poly_powmod(Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::constant(base.field(), base.field().one()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

// Distinct monic irreducible factors over a finite field, in a fixed order.
// Throws FieldError when the field is too large to enumerate constants.
std::vector<Poly<FiniteField>> distinct_irreducible_factors(const Poly<FiniteField>& m);

// Rational roots over Q (distinct, ascending).
std::vector<mpq_class> rational_roots(const Poly<Rationals>& m);

// m = a * b with gcd(a, b) = 1 and both of positive degree, if such a split
// can be found. Over Q only linear factors are detected.
template <ExactField F>
std::optional<std::pair<Poly<F>, Poly<F>>> coprime_split(const Poly<F>& m) {
  const F& f = m.field();
  Poly<F> part(f);
  if constexpr (std::is_same_v<F, FiniteField>) {
    auto irr = distinct_irreducible_factors(m);
    if (irr.size() < 2) return std::nullopt;
    part = irr.front();
  } else {
    auto roots = rational_roots(m);
    if (roots.empty()) return std::nullopt;
    part = Poly<F>::linear(f, roots.front());
  }
  Poly<F> a = Poly<F>::constant(f, f.one()), rest = m.monic();
  while (true) {
    auto [q, r] = rest.divmod(part);
    if (!r.is_zero()) break;
    a = a * part;
    rest = q;
  }
  if (rest.degree() < 1) return std::nullopt;
  return std::make_pair(a, rest);
}

}  // namespace raddeg
