#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace raddeg {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  enum class Kind { prime, prime_power, rationals };

  Kind kind = Kind::prime;
  int p = 0;  // 0 for the rationals
  int k = 1;
  std::vector<int> modulus;  // monic, constant term first, size k+1; empty unless prime_power

  static FieldSpec prime_field(int p);
  static FieldSpec prime_power(int p, int k);
  static FieldSpec rationals();

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(int n);

// Lexicographically least monic irreducible of degree k over GF(p); the
// coefficient tuple (c_{k-1}, ..., c_0) is what gets ordered.
std::vector<int> least_irreducible(int p, int k);
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

// GF(p^k). An element is the integer sum c_i p^i of its coefficients on
// 1, w, ..., w^{k-1}; so elements are exactly 0..q-1 and enumeration is trivial.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  FiniteField() : FiniteField(FieldSpec::prime_field(2)) {}
  explicit FiniteField(const FieldSpec& spec);

  const FieldSpec& spec() const { return tables_->spec; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  bool is_finite() const { return true; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem element(std::uint64_t index) const { return index; }
  Elem from_int(long long v) const;
  Elem from_coefficients(const std::vector<long long>& c) const;
  std::vector<int> coefficients(Elem a) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    if (k_ == 1) {
      Elem s = a + b;
      return s >= q_ ? s - q_ : s;
    }
    if (!tables_->add.empty()) return tables_->add[a * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (k_ == 1) return a == 0 ? 0 : q_ - a;
    if (!tables_->neg.empty()) return tables_->neg[a];
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (k_ == 1) return (a * b) % q_;
    if (a == 0 || b == 0) return 0;
    if (!tables_->log.empty())
      return tables_->exp[tables_->log[a] + tables_->log[b]];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  std::string to_string(Elem a) const;
  Elem parse(const std::string& text) const;

  bool operator==(const FiniteField& o) const { return spec() == o.spec(); }

 private:
  struct Tables {
    FieldSpec spec;
    std::vector<Elem> add, neg;
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;  // doubled so log a + log b needs no reduction
    std::vector<Elem> inv;
  };

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::shared_ptr<const Tables> tables_;
  int p_ = 2;
  int k_ = 1;
  std::uint64_t q_ = 2;
};

class Rationals {
 public:
  using Elem = mpq_class;

  Rationals() : spec_(FieldSpec::rationals()) {}
  explicit Rationals(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  int characteristic() const { return 0; }
  int degree() const { return 1; }
  std::uint64_t order() const { return 0; }
  bool is_finite() const { return false; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem element(std::uint64_t) const { throw FieldError("the rationals cannot be enumerated"); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::uint64_t e) const;

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& text) const;

  bool operator==(const Rationals&) const { return true; }

 private:
  FieldSpec spec_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, std::uint64_t n) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { f.element(n) } -> std::convertible_to<typename F::Elem>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

}  // namespace raddeg
