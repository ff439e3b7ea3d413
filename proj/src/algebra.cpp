#include "raddeg/algebra.hpp"

#include <cstdint>

namespace raddeg {

template <ExactField F>
Algebra<F> Algebra<F>::trusted(const F& field, const Mat& table, const Mat& unit) {
  Algebra a;
  a.field_ = field;
  a.dim_ = unit.size();
  if (table.rows() != a.dim_ * a.dim_ || table.cols() != a.dim_)
    throw DimensionError("structure constants must be (dim*dim) x dim, got " + table.shape());
  a.table_ = table;
  a.unit_ = unit.flattened();
  auto reg = std::make_shared<std::vector<Mat>>();
  for (std::size_t i = 0; i < a.dim_; ++i) reg->push_back(a.right_multiplication(a.basis_element(i)));
  a.regular_ = reg;
  a.lazy_ = std::make_shared<Lazy>();
  return a;
}

template <ExactField F>
Algebra<F> Algebra<F>::from_structure_constants(const F& field, const Mat& table, const Mat& unit) {
  Algebra a = trusted(field, table, unit);
  a.validate();
  return a;
}

template <ExactField F>
void Algebra<F>::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Mat b = basis_element(i);
    if (!(multiply(unit_, b) == b) || !(multiply(b, unit_) == b)) throw UnitViolation(i);
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Mat ij = product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        Mat left = ij * (*regular_)[k];               // (b_i b_j) b_k
        Mat right = multiply(basis_element(i), product(j, k));
        if (!(left == right)) throw AssociativityViolation(i, j, k);
      }
    }
}

template <ExactField F>
Matrix<F> Algebra<F>::multiply(const Mat& x, const Mat& y) const {
  Mat r(field_, 1, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(y[j])) continue;
      auto c = field_.mul(x[i], y[j]);
      std::size_t row = i * dim_ + j;
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& t = table_.at(row, k);
        if (!field_.is_zero(t)) r[k] = field_.add(r[k], field_.mul(c, t));
      }
    }
  }
  return r;
}

template <ExactField F>
Matrix<F> Algebra<F>::power(const Mat& x, std::uint64_t e) const {
  Mat r = unit_, b = x;
  while (e > 0) {
    if (e & 1) r = multiply(r, b);
    e >>= 1;
    if (e) b = multiply(b, b);
  }
  return r;
}

template <ExactField F>
Matrix<F> Algebra<F>::right_multiplication(const Mat& x) const {
  Mat m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& t = table_.at(j * dim_ + i, k);
        if (!field_.is_zero(t)) m.at(j, k) = field_.add(m.at(j, k), field_.mul(x[i], t));
      }
    }
  return m;
}

template <ExactField F>
Matrix<F> Algebra<F>::left_multiplication(const Mat& x) const {
  Mat m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& t = table_.at(i * dim_ + j, k);
        if (!field_.is_zero(t)) m.at(j, k) = field_.add(m.at(j, k), field_.mul(x[i], t));
      }
    }
  return m;
}

template <ExactField F>
bool Algebra<F>::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!(product(i, j) == product(j, i))) return false;
  return true;
}

template <ExactField F>
const std::vector<Matrix<F>>& Algebra<F>::representation() const {
  return rep_ ? *rep_ : *regular_;
}

template <ExactField F>
Algebra<F> Algebra<F>::with_representation(std::vector<Mat> rep) const {
  if (rep.size() != dim_) throw DimensionError("representation needs one matrix per basis element");
  Algebra a = *this;
  a.rep_ = std::make_shared<const std::vector<Mat>>(std::move(rep));
  return a;
}

template <ExactField F>
Algebra<F> Algebra<F>::opposite() const {
  Mat t(field_, dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t.set_row(i * dim_ + j, table_.row(j * dim_ + i));
  return trusted(field_, t, unit_);
}

template <ExactField F>
const std::vector<std::size_t>& Algebra<F>::generators() const {
  std::call_once(lazy_->once, [this] {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < dim_; ++i)
      if (product(i, i) == basis_element(i)) order.push_back(i);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!(product(i, i) == basis_element(i))) order.push_back(i);
    std::vector<std::size_t> gens;
    auto closure = [&]() {
      SubspaceBasis<F> span = SubspaceBasis<F>::span(unit_);
      std::vector<Mat> frontier = {unit_};
      while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& v : frontier)
          for (auto g : gens) {
            Mat w = multiply(v, basis_element(g));
            if (!span.contains(w)) {
              span = subspace_sum(span, SubspaceBasis<F>::span(w));
              next.push_back(w);
            }
          }
        frontier = std::move(next);
      }
      return span;
    };
    SubspaceBasis<F> span = closure();
    for (auto i : order) {
      if (span.is_full()) break;
      if (span.contains(basis_element(i))) continue;
      gens.push_back(i);
      span = closure();
    }
    lazy_->gens = std::move(gens);
  });
  return lazy_->gens;
}

template <ExactField F>
const SubspaceBasis<F>& Algebra<F>::radical() const {
  std::call_once(lazy_->rad_once, [this] { lazy_->rad = jacobson_radical(*this); });
  return lazy_->rad;
}

namespace {

template <ExactField F>
typename F::Elem trace_of_product(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field();
  auto t = f.zero();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!f.is_zero(a.at(r, c)) && !f.is_zero(b.at(c, r))) t = f.add(t, f.mul(a.at(r, c), b.at(c, r)));
  return t;
}

using IntMat = std::vector<std::int64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, std::int64_t mod) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + x * b[k * n + j]) % mod;
    }
  return r;
}

IntMat int_pow(IntMat a, std::int64_t e, std::size_t n, std::int64_t mod) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
  while (e > 0) {
    if (e & 1) r = int_mul(r, a, n, mod);
    e >>= 1;
    if (e) a = int_mul(a, a, n, mod);
  }
  return r;
}

}  // namespace

template <>
SubspaceBasis<Rationals> jacobson_radical(const Algebra<Rationals>& a) {
  const auto& rep = a.representation();
  std::size_t d = a.dim();
  Matrix<Rationals> gram(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram.at(i, j) = trace_of_product(rep[i], rep[j]);
  return kernel_basis(gram);
}

// Descending chain of p-power trace conditions over the prime field: for a
// subalgebra of n x n matrices over GF(p), I_{-1} = A and
// I_i = {a in I_{i-1} : (Tr((ab)~^(p^i)) mod p^(i+1)) / p^i = 0 for all b},
// ending in the radical at i = floor(log_p n). GF(p^k) is first viewed over GF(p).
template <>
SubspaceBasis<FiniteField> jacobson_radical(const Algebra<FiniteField>& a) {
  const FiniteField& f = a.field();
  const int p = f.characteristic(), k = f.degree();
  const auto& rep = a.representation();
  const std::size_t d = a.dim();
  if (d == 0) return SubspaceBasis<FiniteField>(f, 0);
  const std::size_t n0 = rep[0].rows();
  const std::size_t n = n0 * k, D = d * k;

  // integer matrices of the prime-field basis elements b_i w^s
  auto scalar_block = [&](FiniteField::Elem x) {
    // row t = coefficients of w^t x
    std::vector<std::vector<int>> blk(k);
    std::uint64_t wt = 1;
    for (int t = 0; t < k; ++t) {
      blk[t] = f.coefficients(f.mul(f.element(wt), x));
      wt *= p;
    }
    return blk;
  };
  std::vector<IntMat> basis_mats;
  basis_mats.resize(D);
  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t w = 1;
    for (int s = 0; s < k; ++s, w *= p) {
      IntMat m(n * n, 0);
      for (std::size_t r = 0; r < n0; ++r)
        for (std::size_t c = 0; c < n0; ++c) {
          auto x = f.mul(rep[i].at(r, c), f.element(w));
          if (x == 0) continue;
          auto blk = scalar_block(x);
          for (int t = 0; t < k; ++t)
            for (int u = 0; u < k; ++u) m[(r * k + t) * n + (c * k + u)] = blk[t][u];
        }
      basis_mats[i * k + s] = std::move(m);
    }
  }

  FiniteField fp(FieldSpec::prime_field(p));
  Matrix<FiniteField> cur = Matrix<FiniteField>::identity(fp, D);
  int l = 0;
  for (std::size_t pw = p; pw <= n; pw *= p) ++l;
  std::int64_t pi = 1;
  for (int i = 0; i <= l && cur.rows() > 0; ++i, pi *= p) {
    const std::int64_t mod = pi * p;
    Matrix<FiniteField> g(fp, cur.rows(), D);
    for (std::size_t r = 0; r < cur.rows(); ++r) {
      IntMat am(n * n, 0);
      for (std::size_t j = 0; j < D; ++j) {
        std::int64_t c = static_cast<std::int64_t>(cur.at(r, j));
        if (c == 0) continue;
        for (std::size_t e = 0; e < n * n; ++e) am[e] = (am[e] + c * basis_mats[j][e]) % mod;
      }
      for (std::size_t m = 0; m < D; ++m) {
        IntMat x = int_pow(int_mul(am, basis_mats[m], n, mod), pi, n, mod);
        std::int64_t tr = 0;
        for (std::size_t e = 0; e < n; ++e) tr = (tr + x[e * n + e]) % mod;
        if (tr % pi != 0) throw AlgebraError("radical computation: trace not divisible as expected");
        g.at(r, m) = fp.from_int(tr / pi);
      }
    }
    auto ker = kernel_basis(g);
    cur = ker.basis() * cur;
  }
  // back to GF(q) coordinates
  Matrix<FiniteField> out(f, cur.rows(), d);
  for (std::size_t r = 0; r < cur.rows(); ++r)
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<long long> cs(k);
      for (int s = 0; s < k; ++s) cs[s] = static_cast<long long>(cur.at(r, i * k + s));
      out.at(r, i) = f.from_coefficients(cs);
    }
  return SubspaceBasis<FiniteField>::span(out);
}

template <ExactField F>
Poly<F> minimal_polynomial(const Algebra<F>& a, const Matrix<F>& x, const Matrix<F>& unit) {
  const F& f = a.field();
  std::vector<Matrix<F>> powers = {unit.flattened()};
  while (true) {
    Matrix<F> next = a.multiply(powers.back(), x);
    Matrix<F> stack = Matrix<F>::vstack(f, powers, a.dim());
    auto sol = solve(stack, next);
    if (sol) {
      std::vector<typename F::Elem> c(powers.size() + 1, f.zero());
      for (std::size_t i = 0; i < powers.size(); ++i) c[i] = f.neg((*sol)[i]);
      c[powers.size()] = f.one();
      return Poly<F>(f, c);
    }
    powers.push_back(next);
    if (powers.size() > a.dim() + 1) throw AlgebraError("minimal polynomial search did not terminate");
  }
}

template <ExactField F>
Matrix<F> evaluate_at(const Algebra<F>& a, const Poly<F>& p, const Matrix<F>& x, const Matrix<F>& unit) {
  Matrix<F> r(a.field(), 1, a.dim());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    r = a.multiply(r, x);
    r.add_scaled(unit.flattened(), p.coeffs()[i]);
  }
  return r;
}

#define RADDEG_INSTANTIATE(F)                                                                        \
  template class Algebra<F>;                                                                         \
  template Poly<F> minimal_polynomial(const Algebra<F>&, const Matrix<F>&, const Matrix<F>&);        \
  template Matrix<F> evaluate_at(const Algebra<F>&, const Poly<F>&, const Matrix<F>&, const Matrix<F>&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
