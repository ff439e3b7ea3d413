#include <chrono>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "raddeg/radical.hpp"

using namespace raddeg;
using namespace testutil;

namespace {

template <class F>
RadicalTablePtr<F> loop_table(const F& f, std::size_t n) {
  auto pa = loop_algebra(f, n);
  return RadicalTable<F>::build(std::make_shared<const Catalogue<F>>(nakayama_catalogue(pa)));
}

template <class F>
Morphism<F> find_epi(const RadicalTablePtr<F>& t, std::size_t x, std::size_t y) {
  for (const auto& g : t->hom(x, y).morphisms())
    if (is_epi(g)) return g;
  FAIL("no epi");
  return {};
}

template <class F>
Morphism<F> find_mono(const RadicalTablePtr<F>& t, std::size_t x, std::size_t y) {
  for (const auto& g : t->hom(x, y).morphisms())
    if (is_mono(g)) return g;
  FAIL("no mono");
  return {};
}

template <class F>
void compare_with_oracle(const F& f, std::size_t n) {
  auto start = std::chrono::steady_clock::now();
  auto t = loop_table(f, n);
  auto b = oracle::brute_powers(f, t->catalogue().members());
  const std::size_t k = t->size();
  std::size_t levels = std::max(t->N() + 1, b.powers.size());
  for (std::size_t m = 0; m < levels; ++m)
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        std::size_t want = m < b.powers.size() ? b.powers[m][x][y].dim() : 0;
        CHECK(t->power(x, y, m).dim() == want);
      }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 30.0);
}

}  // namespace

TEST_CASE("nakayama and type A catalogues") {
  auto f = gf(3);
  CHECK(nakayama_catalogue(loop_algebra(f, 3)).size() == 3);
  CHECK(nakayama_catalogue(loop_algebra(f, 2)).size() == 2);
  auto a3 = a_algebra(f, 3);
  CHECK(nakayama_catalogue(a3).size() == 6);
  CHECK(type_a_catalogue(a_algebra(f, 2)).size() == 3);
  auto lin = type_a_catalogue(a3);
  auto sink = type_a_catalogue(a_algebra(f, 3, {true, false}));
  REQUIRE(lin.size() == 6);
  REQUIRE(sink.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(lin.member_signature(i) == sink.member_signature(i));
  CHECK(validate(lin).ok);
  CHECK(validate(sink).ok);
  auto k3 = nakayama_catalogue(loop_algebra(f, 3));
  CHECK(k3.labels() == std::vector<std::string>{"M1", "M2", "M3"});
  for (std::size_t i = 0; i < 3; ++i) CHECK(k3.member(i)->dim() == i + 1);
  CHECK(validate(k3).ok);
  CHECK(validate(species_catalogue()).ok);
  // the nakayama and type A lists agree up to isomorphism on linear A3
  auto nk = nakayama_catalogue(a3);
  for (const auto& m : nk.members()) CHECK(lin.match(m).has_value());

  QuiverPresentation two_loops;
  two_loops.vertices = {"1"};
  two_loops.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  two_loops.nilpotency_cap = 2;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) two_loops.relations.push_back({RelationTerm{1, {i, j}}});
  CHECK_THROWS_AS(nakayama_catalogue(from_path_algebra(f, two_loops)), NotNakayama);
  CHECK_THROWS_AS(type_a_catalogue(loop_algebra(f, 2)), NotTypeA);
}

TEST_CASE("catalogue validation") {
  auto pa = loop_algebra(gf(2), 3);
  auto m1 = uniserial(pa, 1), m2 = uniserial(pa, 2), m3 = uniserial(pa, 3);
  Catalogue<FiniteField> twice(pa.algebra, {"M1", "M2", "M2b", "M3"}, {m1, m2, uniserial(pa, 2), m3});
  auto r = validate(twice);
  CHECK(!r.ok);
  REQUIRE(r.issues.size() == 1);
  CHECK(r.issues[0].find("M2 and M2b") != std::string::npos);
  auto dsum = direct_sum(pa.algebra, {m1, m1}).module;
  Catalogue<FiniteField> dec(pa.algebra, {"M1", "D"}, {m1, dsum});
  auto r2 = validate(dec);
  CHECK(!r2.ok);
  CHECK(r2.issues[0].find("D is not indecomposable") != std::string::npos);
  CHECK_THROWS_AS(require_valid(dec), InvariantViolation);
}

TEST_CASE("radical table examples") {
  auto t2 = loop_table(Rationals(), 2);
  CHECK(t2->N() == 3);
  // A = M2: rad(A,A) = rad^2(A,A) = span{x}
  CHECK(t2->power(1, 1, 1).dim() == 1);
  CHECK(t2->power(1, 1, 2).dim() == 1);
  CHECK(t2->power(1, 1, 3).dim() == 0);
  auto t3 = loop_table(gf(2), 3);
  CHECK(t3->N() == 5);
  auto a2 = a_algebra(gf(3), 2);
  auto ta = RadicalTable<FiniteField>::build(std::make_shared<const Catalogue<FiniteField>>(type_a_catalogue(a2)));
  CHECK(ta->N() == 2);
  CHECK_THROWS_AS(RadicalTable<FiniteField>::build(std::make_shared<const Catalogue<FiniteField>>(nakayama_catalogue(loop_algebra(gf(2), 3))), 3),
                  RepInfiniteSuspected);
}

TEST_CASE("depth examples") {
  auto t2 = loop_table(Rationals(), 2);
  auto s = t2->catalogue().member(0), a = t2->catalogue().member(1);
  auto iota = find_mono(t2, 0, 1);
  auto pi = find_epi(t2, 1, 0);
  CHECK(t2->depth(identity_morphism(a)) == Depth{0});
  CHECK(t2->depth(iota) == Depth{1});
  CHECK(t2->depth(compose(pi, iota)) == Depth{2});
  CHECK(t2->depth(zero_morphism(a, a)).infinite());

  auto t3 = loop_table(gf(2), 3);
  CHECK(t3->depth(identity_morphism(t3->catalogue().member(1))) == Depth{0});
  auto soc = find_mono(t3, 0, 2);
  CHECK(t3->depth(soc) == Depth{2});

  // morphisms between direct sums are split into components
  auto ds = direct_sum(t2->catalogue().algebra(), {s, a});
  auto into = compose(ds.projections[1], pi);  // S + A -> S through A
  CHECK(t2->depth(into) == Depth{1});
  auto both = compose(ds.projections[0], iota) + compose(ds.projections[1], compose(pi, iota));
  CHECK(t2->depth(both) == Depth{1});
}

TEST_CASE("irreducible spaces and valuations") {
  auto t3 = loop_table(gf(2), 3);
  auto i12 = t3->irr_space(0, 1);
  CHECK(i12.dim == 1);
  CHECK(i12.a == 1);
  CHECK(i12.b == 1);
  CHECK(t3->irr_space(0, 2).dim == 0);
  auto sp = RadicalTable<FiniteField>::build(std::make_shared<const Catalogue<FiniteField>>(species_catalogue()));
  auto s2p1 = sp->irr_space(0, 1);
  CHECK(s2p1.dim == 2);
  CHECK(sp->kappa_dim(0) == 1);
  CHECK(sp->kappa_dim(1) == 2);
  CHECK(s2p1.a == 2);
  CHECK(s2p1.b == 1);
  auto p1q = sp->irr_space(1, 2);
  CHECK(p1q.dim == 2);
  CHECK(p1q.a == 1);
  CHECK(p1q.b == 2);
  // bimodule bookkeeping
  for (std::size_t x = 0; x < sp->size(); ++x)
    for (std::size_t y = 0; y < sp->size(); ++y) {
      auto s = sp->irr_space(x, y);
      CHECK(s.a * sp->kappa_dim(x) == s.dim);
      CHECK(s.b * sp->kappa_dim(y) == s.dim);
    }
}

TEST_CASE("graded maps") {
  auto t2 = loop_table(Rationals(), 2);
  auto iota = find_mono(t2, 0, 1);
  auto pi = find_epi(t2, 1, 0);
  auto g = t2->graded_map_left(pi, 1, 0, 1);
  CHECK(g.source.dim() == 1);
  CHECK(g.matrix.is_zero());
  for (std::size_t z = 0; z < 2; ++z)
    for (std::size_t l = 0; l + 1 <= 2; ++l) {
      auto gi = t2->graded_map_left(iota, 1, z, l);
      CHECK(rank(gi.matrix) == gi.source.dim());
    }
  auto id = identity_morphism(t2->catalogue().member(1));
  for (std::size_t z = 0; z < 2; ++z)
    for (std::size_t l = 0; l < 3; ++l) {
      auto gi = t2->graded_map_left(id, 0, z, l);
      CHECK(gi.matrix.is_identity());
    }
}

TEST_CASE("radical recursion agrees from both sides and is an ideal") {
  auto run = [](auto t) {
    const std::size_t k = t->size();
    const auto& f = t->field();
    using F = std::decay_t<decltype(f)>;
    for (std::size_t n = 1; n < t->N(); ++n)
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
          std::vector<Matrix<F>> rows;
          for (std::size_t z = 0; z < k; ++z)
            for (std::size_t i = 0; i < t->power(x, z, 1).dim(); ++i)
              for (std::size_t j = 0; j < t->power(z, y, n).dim(); ++j) {
                auto u = t->hom(x, z).element(t->power(x, z, 1).vector(i));
                auto v = t->hom(z, y).element(t->power(z, y, n).vector(j));
                rows.push_back(t->hom(x, y).coordinates(compose(u, v)));
              }
          auto other = SubspaceBasis<F>::span(Matrix<F>::vstack(f, rows, t->hom(x, y).size()));
          CHECK(other == t->power(x, y, n + 1));
          // ideal: composing with any hom keeps rad^n
          for (std::size_t z = 0; z < k; ++z)
            for (std::size_t i = 0; i < t->power(x, y, n).dim(); ++i) {
              auto u = t->hom(x, y).element(t->power(x, y, n).vector(i));
              for (const auto& h : t->hom(y, z).morphisms())
                CHECK(t->power(x, z, n).contains(t->hom(x, z).coordinates(compose(u, h))));
            }
        }
  };
  run(loop_table(gf(3), 4));
  run(RadicalTable<FiniteField>::build(std::make_shared<const Catalogue<FiniteField>>(species_catalogue())));
  run(RadicalTable<Rationals>::build(
      std::make_shared<const Catalogue<Rationals>>(type_a_catalogue(a_algebra(Rationals(), 4, {true, false, true})))));
}

TEST_CASE("radical powers match the path oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    compare_with_oracle(gf(2), n);
    compare_with_oracle(gf(3), n);
    compare_with_oracle(Rationals(), n);
  }
}
