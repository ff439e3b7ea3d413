// writes the bundled workspace fixtures into the directory given as argv[1]
#include <fstream>
#include <iostream>

#include "raddeg/fleet.hpp"
#include "raddeg/workspace.hpp"

using namespace raddeg;

namespace {

template <ExactField F>
Morphism<F> first_irr(const RadicalTable<F>& t, const std::string& x, const std::string& y) {
  const auto& c = t.catalogue();
  return t.irr_space(*c.index_of(x), *c.index_of(y)).basis.at(0);
}

template <ExactField F>
WorkspaceFile quiver_file(const FieldSpec& spec, const QuiverPresentation& q, const std::string& builder) {
  WorkspaceFile ws;
  ws.field = spec;
  ws.quiver = q;
  ws.builder = builder;
  return ws;
}

void add_morphism(WorkspaceFile& ws, const std::string& name, const std::string& s, const std::string& t,
                  const Morphism<FiniteField>& f) {
  ws.morphisms.push_back(morphism_block(name, s, t, f));
}

WorkspaceFile loop_file(const FieldSpec& spec, std::size_t n) {
  auto ws = quiver_file<FiniteField>(spec, truncated_loop(n), "nakayama");
  if (spec.kind == FieldSpec::Kind::rationals) {
    Rationals q(spec);
    auto built = build_workspace(ws, q);
    auto t = RadicalTable<Rationals>::build(built.catalogue);
    ws.morphisms.push_back(morphism_block("iota", "M1", "M2", first_irr(*t, "M1", "M2")));
    ws.morphisms.push_back(morphism_block("pi", "M2", "M1", first_irr(*t, "M2", "M1")));
    return ws;
  }
  FiniteField f(spec);
  auto built = build_workspace(ws, f);
  auto t = RadicalTable<FiniteField>::build(built.catalogue);
  add_morphism(ws, "iota", "M1", "M2", first_irr(*t, "M1", "M2"));
  add_morphism(ws, "pi", "M2", "M1", first_irr(*t, "M2", "M1"));
  return ws;
}

WorkspaceFile species_file() {
  auto c = std::make_shared<const Catalogue<FiniteField>>(species_catalogue());
  const auto& a = *c->algebra();
  WorkspaceFile ws;
  ws.field = c->field().spec();
  ws.structure = structure_block(a, {a.basis_element(0), a.basis_element(4)});
  ws.builder = "listed";
  ws.members = c->labels();
  for (std::size_t i = 0; i < c->size(); ++i) ws.modules.push_back(module_block(c->label(i), c->member(i)));
  auto t = RadicalTable<FiniteField>::build(c);
  auto s2 = *c->index_of("S2"), p1 = *c->index_of("P1"), q = *c->index_of("P1/S2");
  auto firsts = irreducible_maps(*t, s2, p1).maps, seconds = irreducible_maps(*t, p1, q).maps;
  bool nonzero = false, zero = false;
  for (const auto& f : firsts)
    for (const auto& g : seconds) {
      bool z = compose(f, g).is_zero();
      if (!z && !nonzero) {
        add_morphism(ws, "f", "S2", "P1", f);
        add_morphism(ws, "g", "P1", "P1/S2", g);
        nonzero = true;
      }
      if (z && !zero) {
        add_morphism(ws, "f0", "S2", "P1", f);
        add_morphism(ws, "g0", "P1", "P1/S2", g);
        zero = true;
      }
    }
  return ws;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 1;
  }
  const std::string dir = argv[1];
  auto gf2 = FieldSpec::prime_field(2);
  std::vector<std::pair<std::string, WorkspaceFile>> files{
      {"kx2", loop_file(gf2, 2)},
      {"kx3", loop_file(gf2, 3)},
      {"kx4", loop_file(gf2, 4)},
      {"kx2_gf4", loop_file(FieldSpec::prime_power(2, 2), 2)},
      {"kx3_q", loop_file(FieldSpec::rationals(), 3)},
      {"a2", quiver_file<FiniteField>(gf2, type_a(2, {true}), "type_a")},
      {"a3", quiver_file<FiniteField>(gf2, type_a(3, {true, true}), "type_a")},
      {"a3_sink", quiver_file<FiniteField>(FieldSpec::prime_field(3), type_a(3, {true, false}), "type_a")},
      {"species", species_file()},
  };
  for (const auto& [name, ws] : files) {
    std::ofstream out(dir + "/" + name + ".ws", std::ios::binary);
    out << emit_workspace(ws);
    if (!out) {
      std::cerr << "cannot write " << name << "\n";
      return 1;
    }
  }
  return 0;
}
