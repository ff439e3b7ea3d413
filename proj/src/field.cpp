#include "raddeg/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace raddeg {

namespace {

using IntPoly = std::vector<int>;  // constant term first

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mod(IntPoly a, const IntPoly& m, int p) {
  trim(a);
  int lead_inv = 1;
  for (int t = 1; t < p; ++t)
    if ((m.back() * t) % p == 1) lead_inv = t;
  while (a.size() >= m.size()) {
    int c = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

IntPoly poly_mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(r, m, p);
}

IntPoly poly_gcd(IntPoly a, IntPoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IntPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^e) mod m
IntPoly frobenius_power(const IntPoly& m, int p, int e) {
  IntPoly x = poly_mod({0, 1}, m, p);
  for (int step = 0; step < e; ++step) {
    IntPoly base = x, acc = {1};
    for (int t = p; t > 0; t >>= 1) {
      if (t & 1) acc = poly_mulmod(acc, base, m, p);
      base = poly_mulmod(base, base, m, p);
    }
    x = acc;
  }
  return x;
}

bool divides(const IntPoly& d, const IntPoly& a, int p) { return poly_mod(a, d, p).empty(); }

bool trial_division_irreducible(const IntPoly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      IntPoly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t r = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(r % p);
        r /= p;
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Rabin: f | x^(p^k) - x and gcd(f, x^(p^(k/r)) - x) = 1 for prime r | k.
bool rabin_irreducible(const IntPoly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  IntPoly x = {0, 1};
  auto minus_x = [&](IntPoly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] - 1 + p) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frobenius_power(f, p, k)).empty()) return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(r)) continue;
    IntPoly g = poly_gcd(f, minus_x(frobenius_power(f, p, k / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  IntPoly f = poly;
  for (auto& c : f) c = ((c % p) + p) % p;
  trim(f);
  if (f.size() < 2) return false;
  int k = static_cast<int>(f.size()) - 1;
  if (ipow(static_cast<std::uint64_t>(p), k / 2) <= 200000) return trial_division_irreducible(f, p);
  return rabin_irreducible(f, p);
}

std::vector<int> least_irreducible(int p, int k) {
  std::uint64_t count = ipow(static_cast<std::uint64_t>(p), k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    IntPoly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t r = idx;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(r % p);
      r /= p;
    }
    if (k > 1 && f[0] == 0) continue;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

FieldSpec FieldSpec::prime_field(int p) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p > 97) throw FieldError("prime " + std::to_string(p) + " exceeds the limit 97");
  FieldSpec s;
  s.kind = Kind::prime;
  s.p = p;
  s.k = 1;
  return s;
}

FieldSpec FieldSpec::prime_power(int p, int k) {
  if (k < 1 || k > 8) throw FieldError("extension degree " + std::to_string(k) + " outside 1..8");
  FieldSpec s = prime_field(p);
  if (k == 1) return s;
  s.kind = Kind::prime_power;
  s.k = k;
  s.modulus = least_irreducible(p, k);
  return s;
}

FieldSpec FieldSpec::rationals() {
  FieldSpec s;
  s.kind = Kind::rationals;
  s.p = 0;
  s.k = 1;
  return s;
}

std::string FieldSpec::name() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::prime:
      return "GF(" + std::to_string(p) + ")";
    case Kind::prime_power:
      return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  }
  return "?";
}

FiniteField::FiniteField(const FieldSpec& spec_in) {
  if (spec_in.kind == FieldSpec::Kind::rationals) throw FieldError("FiniteField given the rationals");
  FieldSpec spec = spec_in;
  if (!is_prime(spec.p) || spec.p > 97) throw FieldError("bad characteristic " + std::to_string(spec.p));
  if (spec.k < 1 || spec.k > 8) throw FieldError("extension degree " + std::to_string(spec.k) + " outside 1..8");
  if (spec.k == 1) {
    spec.kind = FieldSpec::Kind::prime;
    spec.modulus.clear();
  } else {
    if (spec.modulus.empty()) spec.modulus = least_irreducible(spec.p, spec.k);
    if (static_cast<int>(spec.modulus.size()) != spec.k + 1 || spec.modulus.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(spec.k));
    if (!is_irreducible_mod_p(spec.modulus, spec.p)) throw FieldError("modulus is reducible");
  }
  p_ = spec.p;
  k_ = spec.k;
  q_ = ipow(static_cast<std::uint64_t>(p_), k_);

  auto t = std::make_shared<Tables>();
  t->spec = spec;
  tables_ = t;  // slow paths below read spec through tables_
  if (k_ == 1) {
    t->inv.assign(q_, 0);
    for (Elem a = 1; a < q_; ++a)
      for (Elem b = 1; b < q_; ++b)
        if ((a * b) % q_ == 1) t->inv[a] = b;
  } else if (q_ <= 1024) {
    t->add.resize(q_ * q_);
    t->neg.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      t->neg[a] = neg_slow(a);
      for (Elem b = 0; b < q_; ++b) t->add[a * q_ + b] = add_slow(a, b);
    }
    // find a generator of the multiplicative group
    Elem gen = 0;
    for (Elem g = 2; g < q_ && gen == 0; ++g) {
      Elem x = g;
      std::uint64_t ord = 1;
      while (x != 1) {
        x = mul_slow(x, g);
        ++ord;
      }
      if (ord == q_ - 1) gen = g;
    }
    if (gen == 0) gen = 1;  // only when q = 2, which never reaches here
    t->log.assign(q_, 0);
    t->exp.assign(2 * (q_ - 1), 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      t->exp[i] = x;
      t->exp[i + q_ - 1] = x;
      t->log[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, gen);
    }
    t->inv.assign(q_, 0);
    for (Elem a = 1; a < q_; ++a) t->inv[a] = t->exp[(q_ - 1 - t->log[a]) % (q_ - 1)];
  }
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_coefficients(const std::vector<long long>& c) const {
  if (static_cast<int>(c.size()) > k_) throw FieldError("too many coefficients for " + spec().name());
  Elem r = 0;
  std::uint64_t place = 1;
  for (long long v : c) {
    r += from_int(v) * place;
    place *= p_;
  }
  return r;
}

std::vector<int> FiniteField::coefficients(Elem a) const {
  std::vector<int> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

FiniteField::Elem FiniteField::add_slow(Elem a, Elem b) const {
  Elem r = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg_slow(Elem a) const {
  Elem r = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  IntPoly prod = poly_mulmod(ca, cb, tables_->spec.modulus, p_);
  Elem r = 0;
  std::uint64_t place = 1;
  for (int c : prod) {
    r += static_cast<Elem>(c) * place;
    place *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw FieldError("division by zero in " + spec().name());
  if (!tables_->inv.empty()) return tables_->inv[a];
  return pow(a, q_ - 2);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  std::string s = "{";
  auto c = coefficients(a);
  for (int i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "}";
}

FiniteField::Elem FiniteField::parse(const std::string& text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw FieldError("empty field element");
  if (s.front() == '{') {
    if (s.back() != '}') throw FieldError("unterminated coefficient list '" + text + "'");
    std::vector<long long> c;
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        std::size_t used = 0;
        c.push_back(std::stoll(part, &used));
        if (used != part.size()) throw FieldError("bad coefficient '" + part + "'");
      } catch (const std::logic_error&) {
        throw FieldError("bad coefficient '" + part + "'");
      }
    }
    return from_coefficients(c);
  }
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw FieldError("bad field element '" + text + "'");
    return from_int(v);
  } catch (const std::logic_error&) {
    throw FieldError("bad field element '" + text + "'");
  }
}

Rationals::Rationals(const FieldSpec& spec) : spec_(spec) {
  if (spec.kind != FieldSpec::Kind::rationals) throw FieldError("Rationals given a finite field spec");
}

Rationals::Elem Rationals::inv(const Elem& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero in Q");
  Elem r = 1 / a;
  r.canonicalize();
  return r;
}

Rationals::Elem Rationals::pow(const Elem& a, std::uint64_t e) const {
  Elem r = 1, b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rationals::Elem Rationals::parse(const std::string& text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw FieldError("empty rational");
  auto ok = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!ok(num) || !ok(den) || den[0] == '-') throw FieldError("bad rational '" + text + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw FieldError("zero denominator in '" + text + "'");
  Elem r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace raddeg
