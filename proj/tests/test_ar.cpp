#include "doctest.h"
#include "helpers.hpp"
#include "raddeg/ar.hpp"

using namespace raddeg;
using namespace testutil;

namespace {

template <class F>
std::shared_ptr<const Catalogue<F>> loop_cat(const F& f, std::size_t n) {
  return std::make_shared<const Catalogue<F>>(nakayama_catalogue(loop_algebra(f, n)));
}

template <class F>
std::shared_ptr<const Catalogue<F>> a_cat(const F& f, std::size_t n, std::vector<bool> fw = {}) {
  return std::make_shared<const Catalogue<F>>(type_a_catalogue(a_algebra(f, n, fw)));
}

std::shared_ptr<const Catalogue<FiniteField>> species_cat() {
  return std::make_shared<const Catalogue<FiniteField>>(species_catalogue());
}

template <class F>
std::size_t idx(const Catalogue<F>& c, const std::string& l) {
  auto i = c.index_of(l);
  REQUIRE(i.has_value());
  return *i;
}

template <class F>
void check_module(const ModulePtr<F>& m) {
  CHECK_NOTHROW(Module<F>::create(m->algebra_ptr(), m->actions()));
}

}  // namespace

TEST_CASE("minimal projective presentations") {
  auto f = gf(2);
  auto c = loop_cat(f, 3);
  SUBCASE("projective has zero syzygy") {
    auto p = minimal_projective_presentation(c->member(2), c->standard());
    CHECK(p.p0.module->dim() == 3);
    CHECK(p.p1.module->dim() == 0);
  }
  SUBCASE("simple over k[x]/(x^3)") {
    auto p = minimal_projective_presentation(c->member(0), c->standard());
    CHECK(p.p0.module->dim() == 3);
    CHECK(p.syzygy.module->dim() == 2);
    CHECK(p.p1.module->dim() == 3);
    CHECK(is_epi(p.p0.map));
    CHECK(compose(p.map, p.p0.map).is_zero());
  }
  SUBCASE("S1 over A2") {
    auto a = a_cat(f, 2);
    auto p = minimal_projective_presentation(a->member(idx(*a, "[1,1]")), a->standard());
    CHECK(p.p0.module->dim() == 2);
    CHECK(p.syzygy.module->dim() == 1);
    CHECK(p.p1.module->dim() == 1);
  }
}

TEST_CASE("tau by D Tr") {
  auto f = gf(3);
  SUBCASE("A2") {
    auto c = a_cat(f, 2);
    ArEngine<FiniteField> e(c);
    auto t = e.tau(c->member(idx(*c, "[1,1]")));
    check_module(t);
    CHECK(c->match(t) == idx(*c, "[2,2]"));
    CHECK_THROWS_AS(e.tau(c->member(idx(*c, "[1,2]"))), IsProjective);
    CHECK_THROWS_AS(e.tau_inverse(c->member(idx(*c, "[1,1]"))), IsInjective);
    CHECK(e.tau_inverse_member(idx(*c, "[2,2]")) == idx(*c, "[1,1]"));
  }
  SUBCASE("self-injective loop") {
    auto c = loop_cat(f, 3);
    ArEngine<FiniteField> e(c);
    CHECK(e.tau_member(1) == 1u);
    CHECK(e.tau_member(0) == 0u);
    CHECK_FALSE(e.tau_member(2).has_value());
  }
  SUBCASE("tau inverse undoes tau") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& c : {a_cat(f, n), loop_cat(f, n)}) {
        ArEngine<FiniteField> e(c);
        for (std::size_t i = 0; i < c->size(); ++i) {
          if (e.member_projective(i)) continue;
          auto t = *e.tau_member(i);
          CHECK(e.tau_inverse_member(t) == i);
        }
      }
  }
  SUBCASE("rationals") {
    auto c = loop_cat(Rationals{}, 4);
    ArEngine<Rationals> e(c);
    CHECK(e.tau_member(0) == 0u);
    CHECK(e.tau_member(2) == 2u);
  }
}

TEST_CASE("ext1 and extensions") {
  auto f = gf(2);
  auto c = loop_cat(f, 3);
  auto x = ext1(c->member(0), c->member(0), c->standard());
  CHECK(x.dim() == 1);
  auto s = extension(x, Matrix<FiniteField>::unit_vector(f, 1, 0));
  check_module(s.middle);
  CHECK(s.middle->dim() == 2);
  CHECK(is_mono(s.inject));
  CHECK(is_epi(s.project));
  CHECK(compose(s.inject, s.project).is_zero());
  CHECK(c->match(s.middle) == 1u);
  // the split class gives the direct sum
  auto z = extension(x, Matrix<FiniteField>(f, 1, 1));
  CHECK(decompose(z.middle).size() == 1);
  CHECK(decompose(z.middle)[0].multiplicity == 2);
  CHECK(ext1(c->member(2), c->member(0), c->standard()).dim() == 0);
}

TEST_CASE("almost split certification") {
  auto f = gf(2);
  SUBCASE("A2") {
    auto c = a_cat(f, 2);
    ArEngine<FiniteField> e(c);
    auto s1 = idx(*c, "[1,1]"), p1 = idx(*c, "[1,2]"), s2 = idx(*c, "[2,2]");
    auto s = e.almost_split_sequence(s1);
    CHECK(s->left == s2);
    CHECK(c->match(s->seq.middle) == p1);
    // the projection P1 -> S1 itself
    Morphism<FiniteField> proj;
    for (const auto& g : hom_basis(c->member(p1), c->member(s1)).morphisms())
      if (is_epi(g)) proj = g;
    CHECK(e.is_right_almost_split(proj, s1));
    CHECK_FALSE(e.is_right_almost_split(identity_morphism(c->member(s1)), s1));
    CHECK_FALSE(e.is_left_almost_split(identity_morphism(c->member(s2)), s2));
    CHECK_THROWS_AS(e.almost_split_sequence(s2), IsProjective);
  }
  SUBCASE("socle inclusion of k[x]/(x^2)") {
    auto c = loop_cat(f, 2);
    ArEngine<FiniteField> e(c);
    Morphism<FiniteField> inc;
    for (const auto& g : hom_basis(c->member(0), c->member(1)).morphisms())
      if (is_mono(g)) inc = g;
    CHECK(e.is_left_almost_split(inc, 0));
  }
  SUBCASE("k[x]/(x^3)") {
    auto c = loop_cat(f, 3);
    ArEngine<FiniteField> e(c);
    auto s = e.almost_split_sequence(0);
    CHECK(c->match(s->seq.middle) == 1u);
    auto m2 = e.almost_split_sequence(1);
    auto parts = decompose(m2->seq.middle);
    REQUIRE(parts.size() == 2);
    std::vector<std::size_t> got;
    for (const auto& p : parts) got.push_back(*c->match(p.module));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::size_t>{0, 2});
  }
}

TEST_CASE("species sequences and valuations") {
  auto c = species_cat();
  auto t = RadicalTable<FiniteField>::build(c);
  ArEngine<FiniteField> e(c);
  auto s2 = idx(*c, "S2"), p1 = idx(*c, "P1"), q = idx(*c, "P1/S2"), s1 = idx(*c, "S1");
  CHECK(e.member_projective(s2));
  CHECK(e.member_projective(p1));
  auto first = e.almost_split_sequence(q);
  CHECK(first->left == s2);
  CHECK(middle_multiplicities(*t, *first) == std::vector<std::size_t>{0, 1, 0, 0});
  auto second = e.almost_split_sequence(s1);
  CHECK(second->left == p1);
  CHECK(middle_multiplicities(*t, *second) == std::vector<std::size_t>{0, 0, 2, 0});
  // multiplicity of X in the sequence ending at M is a(X, M); from tau M it is b(tau M, X)
  for (auto m : {q, s1}) {
    auto s = e.almost_split_sequence(m);
    auto mult = middle_multiplicities(*t, *s);
    for (std::size_t x = 0; x < c->size(); ++x) {
      CHECK(t->irr_space(x, m).a == mult[x]);
      CHECK(t->irr_space(s->left, x).b == mult[x]);
    }
  }
}

TEST_CASE("middle terms match valuations across type A orientations") {
  auto f = gf(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<bool> fw;
      for (std::size_t i = 0; i + 1 < n; ++i) fw.push_back((mask >> i) & 1u);
      auto c = a_cat(f, n, fw);
      auto t = RadicalTable<FiniteField>::build(c);
      ArEngine<FiniteField> e(c);
      for (std::size_t m = 0; m < c->size(); ++m) {
        if (e.member_projective(m)) continue;
        auto s = e.almost_split_sequence(m);
        CHECK(s->left == *e.tau_member(m));
        auto mult = middle_multiplicities(*t, *s);
        for (std::size_t x = 0; x < c->size(); ++x) CHECK(t->irr_space(x, m).a == mult[x]);
      }
    }
}

TEST_CASE("ar quiver and dot") {
  auto f = gf(2);
  auto c = a_cat(f, 2);
  auto t = RadicalTable<FiniteField>::build(c);
  ArEngine<FiniteField> e(c);
  auto q = ar_quiver(*t, e);
  CHECK(q.arrows.size() == 2);
  auto dot = to_dot(q);
  auto count = [&](const std::string& s) {
    std::size_t n = 0;
    for (auto p = dot.find(s); p != std::string::npos; p = dot.find(s, p + 1)) ++n;
    return n;
  };
  CHECK(count("[label=\"(1,1)\"]") == 2);
  CHECK(count("style=dashed, constraint=false") == 1);
  CHECK(count("\\n(") == 3);
  CHECK(dot.find("\"[1,1]\" -> \"[2,2]\" [style=dashed") != std::string::npos);

  auto sq = ar_quiver(*RadicalTable<FiniteField>::build(species_cat()), ArEngine<FiniteField>(species_cat()));
  std::vector<std::string> labels;
  for (const auto& a : sq.arrows)
    labels.push_back(sq.labels[a.source] + ">" + sq.labels[a.target] + ":" + std::to_string(a.a) + "," +
                     std::to_string(a.b));
  CHECK(labels == std::vector<std::string>{"S2>P1:2,1", "P1>P1/S2:1,2", "P1/S2>S1:2,1"});
}

TEST_CASE("completeness") {
  auto f = gf(2);
  CHECK(completeness_check(loop_cat(f, 3)).complete);
  CHECK(completeness_check(a_cat(f, 2)).complete);
  CHECK(completeness_check(species_cat()).complete);
  auto pa = loop_algebra(f, 3);
  auto full = nakayama_catalogue(pa);
  auto partial = std::make_shared<const Catalogue<FiniteField>>(
      pa.algebra, std::vector<std::string>{"M1", "M3"}, std::vector<ModulePtr<FiniteField>>{full.member(0), full.member(2)});
  auto r = completeness_check(partial);
  CHECK_FALSE(r.complete);
  CHECK(r.missing_dims == std::vector<std::size_t>{2});
}
