#include "doctest.h"
#include "helpers.hpp"

using namespace raddeg;
using namespace testutil;

namespace {

template <class F>
void check_idempotents(const Algebra<F>& a, const IdempotentSet<F>& s) {
  Matrix<F> sum(a.field(), 1, a.dim());
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const auto& e = s.elements[i];
    CHECK(a.multiply(e, e) == e);
    for (std::size_t j = 0; j < s.elements.size(); ++j)
      if (i != j) CHECK(a.multiply(e, s.elements[j]).is_zero());
    sum += e;
  }
  CHECK(sum == a.unit());
}

template <class F>
void check_radical(const Algebra<F>& a) {
  const auto& j = a.radical();
  // nilpotent: J^dim = 0
  std::vector<Matrix<F>> power;
  for (std::size_t i = 0; i < j.dim(); ++i) power.push_back(j.vector(i));
  for (std::size_t step = 0; step < a.dim() && !power.empty(); ++step) {
    std::vector<Matrix<F>> next;
    for (const auto& x : power)
      for (std::size_t i = 0; i < j.dim(); ++i) next.push_back(a.multiply(x, j.vector(i)));
    auto sp = SubspaceBasis<F>::span(Matrix<F>::vstack(a.field(), next, a.dim()));
    power.clear();
    for (std::size_t i = 0; i < sp.dim(); ++i) power.push_back(sp.vector(i));
  }
  CHECK(power.empty());
  // ideal
  for (std::size_t i = 0; i < j.dim(); ++i)
    for (std::size_t b = 0; b < a.dim(); ++b) {
      CHECK(j.contains(a.multiply(j.vector(i), a.basis_element(b))));
      CHECK(j.contains(a.multiply(a.basis_element(b), j.vector(i))));
    }
}

}  // namespace

TEST_CASE("structure constants: truncated polynomial ring over GF(2)") {
  auto f = gf(2);
  // basis 1, x
  auto table = mat(f, {{1, 0}, {0, 1}, {0, 1}, {0, 0}});
  auto a = Algebra<FiniteField>::from_structure_constants(f, table, mat(f, {{1, 0}}));
  CHECK(a.dim() == 2);
  CHECK(a.is_commutative());
  CHECK(a.radical().dim() == 1);
  CHECK(a.opposite().same_table(a));
}

TEST_CASE("structure constants: associativity and unit failures") {
  auto f = gf(2);
  // x*x = 1 + x but 1*x = 0 breaks the unit
  auto bad_unit = mat(f, {{1, 0}, {0, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(Algebra<FiniteField>::from_structure_constants(f, bad_unit, mat(f, {{1, 0}})), UnitViolation);
  auto f3 = gf(3);
  Matrix<FiniteField> t(f3, 9, 3);
  // b0 unit; b1*b1 = b2, b1*b2 = b0, b2*b1 = b1 (not associative)
  for (std::size_t i = 0; i < 3; ++i) {
    t.at(0 * 3 + i, i) = f3.one();
    t.at(i * 3 + 0, i) = f3.one();
  }
  t.at(1 * 3 + 1, 2) = f3.one();
  t.at(1 * 3 + 2, 0) = f3.one();
  t.at(2 * 3 + 1, 1) = f3.one();
  CHECK_THROWS_AS(Algebra<FiniteField>::from_structure_constants(f3, t, mat(f3, {{1, 0, 0}})), AssociativityViolation);
}

TEST_CASE("structure constants: the two triangular GF(4)/GF(2) algebras") {
  auto up = species_algebra();
  auto low = species_algebra_lower();
  CHECK(up.dim() == 5);
  CHECK(low.dim() == 5);
  CHECK(up.radical().dim() == 2);
  CHECK(low.radical().dim() == 2);
  check_radical(up);
  check_radical(low);
  auto e = primitive_idempotents(up);
  CHECK(e.elements.size() == 2);
  check_idempotents(up, e);
  // the diagonal matrix units
  CHECK(e.elements[0] == up.basis_element(0));
  CHECK(e.elements[1] == up.basis_element(4));
  auto el = primitive_idempotents(low);
  CHECK(el.elements.size() == 2);
  check_idempotents(low, el);
}

TEST_CASE("path algebras") {
  auto f = gf(3);
  SUBCASE("loop with x^3") {
    auto pa = loop_algebra(f, 3);
    CHECK(pa.algebra->dim() == 3);
    CHECK(pa.algebra->is_commutative());
    CHECK(pa.algebra->radical().dim() == 2);
    auto e = primitive_idempotents(*pa.algebra);
    REQUIRE(e.elements.size() == 1);
    CHECK(e.elements[0] == pa.algebra->unit());
  }
  SUBCASE("A2") {
    auto pa = a_algebra(f, 2);
    CHECK(pa.algebra->dim() == 3);
    CHECK(pa.algebra->radical().dim() == 1);
    auto e = primitive_idempotents(*pa.algebra);
    REQUIRE(e.elements.size() == 2);
    check_idempotents(*pa.algebra, e);
    CHECK(e.elements[0] == pa.algebra->basis_element(pa.vertex_basis[0]));
    CHECK(e.elements[1] == pa.algebra->basis_element(pa.vertex_basis[1]));
  }
  SUBCASE("A3 with a zero composite") {
    auto q = type_a_linear(3);
    q.relations.push_back({RelationTerm{1, {0, 1}}});
    auto pa = from_path_algebra(f, q);
    CHECK(pa.algebra->dim() == 5);
    check_radical(*pa.algebra);
  }
  SUBCASE("not admissible") {
    auto q = truncated_loop(3);
    q.nilpotency_cap = 2;
    CHECK_THROWS_AS(from_path_algebra(f, q), NotAdmissible);
    auto r = truncated_loop(3);
    r.relations.push_back({RelationTerm{1, {0}}});
    CHECK_THROWS_AS(from_path_algebra(f, r), NotAdmissible);
  }
  SUBCASE("path cap") {
    QuiverPresentation q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    q.nilpotency_cap = 16;
    q.relations = {{RelationTerm{1, std::vector<std::size_t>(16, 0)}}};
    CHECK_THROWS_AS(from_path_algebra(f, q), ResourceError);
  }
}

TEST_CASE("radical examples") {
  auto f4 = gf(2, 2);
  auto f2 = gf(2);
  // GF(4) over GF(2): basis 1, w with w^2 = w + 1
  auto t = mat(f2, {{1, 0}, {0, 1}, {0, 1}, {1, 1}});
  auto a = Algebra<FiniteField>::from_structure_constants(f2, t, mat(f2, {{1, 0}}));
  CHECK(a.radical().dim() == 0);
  CHECK(is_local(a));
  CHECK(primitive_idempotents(a).elements.size() == 1);
  // matrix algebra M2(GF(2)) is semisimple and not local
  Matrix<FiniteField> m(f2, 16, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) m.at((i * 2 + j) * 4 + (j * 2 + l), i * 2 + l) = f2.one();
  auto mm = Algebra<FiniteField>::from_structure_constants(f2, m, mat(f2, {{1, 0, 0, 1}}));
  CHECK(mm.radical().dim() == 0);
  CHECK(!is_local(mm));
  auto ids = primitive_idempotents(mm);
  CHECK(ids.elements.size() == 2);
  check_idempotents(mm, ids);
  (void)f4;
}

TEST_CASE("radical and idempotents across fields and fleet") {
  auto check_all = [](const auto& f) {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto pa = loop_algebra(f, n);
      CHECK(pa.algebra->radical().dim() == n - 1);
      check_radical(*pa.algebra);
      CHECK(primitive_idempotents(*pa.algebra).elements.size() == 1);
    }
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& o : type_a_orientations(n)) {
        auto pa = from_path_algebra(f, type_a(n, o));
        // radical = span of the arrows' paths
        CHECK(pa.algebra->radical().dim() == pa.algebra->dim() - n);
        if (o == std::vector<bool>(n - 1, true)) CHECK(pa.algebra->dim() == n * (n + 1) / 2);
        check_radical(*pa.algebra);
        auto e = primitive_idempotents(*pa.algebra);
        CHECK(e.elements.size() == n);
        check_idempotents(*pa.algebra, e);
      }
  };
  check_all(gf(2));
  check_all(gf(3));
  check_all(gf(2, 2));
  check_all(Rationals());
}

TEST_CASE("radical in characteristic p exceeds the trace-form test") {
  // GF(2)[x]/(x^2 - 1) = GF(2)[y]/(y^2): radical 1-dimensional though the trace form vanishes
  auto f = gf(2);
  auto t = mat(f, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  auto a = Algebra<FiniteField>::from_structure_constants(f, t, mat(f, {{1, 0}}));
  CHECK(a.radical().dim() == 1);
  CHECK(a.radical().contains(mat(f, {{1, 1}})));
  // group algebra GF(3)[C3]
  auto f3 = gf(3);
  Matrix<FiniteField> g(f3, 9, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g.at(i * 3 + j, (i + j) % 3) = f3.one();
  auto c3 = Algebra<FiniteField>::from_structure_constants(f3, g, mat(f3, {{1, 0, 0}}));
  CHECK(c3.radical().dim() == 2);
  CHECK(is_local(c3));
}

TEST_CASE("opposite algebra") {
  auto pa = a_algebra(gf(3), 2);
  auto op = pa.algebra->opposite();
  CHECK(!op.same_table(*pa.algebra));
  CHECK(op.opposite().same_table(*pa.algebra));
  auto loop = loop_algebra(Rationals(), 3);
  CHECK(loop.algebra->opposite().same_table(*loop.algebra));
}
