#include "raddeg/fleet.hpp"

namespace raddeg {

QuiverPresentation truncated_loop(std::size_t n) {
  QuiverPresentation q;
  q.vertices = {"1"};
  q.nilpotency_cap = n;
  if (n < 2) return q;  // k itself
  q.arrows = {{"x", 0, 0}};
  q.relations = {{RelationTerm{1, std::vector<std::size_t>(n, 0)}}};
  return q;
}

QuiverPresentation type_a(std::size_t n, const std::vector<bool>& forward) {
  QuiverPresentation q;
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool f = i < forward.size() ? forward[i] : true;
    std::string name = "a" + std::to_string(i + 1);
    q.arrows.push_back(f ? QuiverArrow{name, i, i + 1} : QuiverArrow{name, i + 1, i});
  }
  q.nilpotency_cap = n;
  return q;
}

QuiverPresentation type_a_linear(std::size_t n) { return type_a(n, std::vector<bool>(n ? n - 1 : 0, true)); }

std::vector<std::vector<bool>> type_a_orientations(std::size_t n) {
  std::vector<std::vector<bool>> out;
  std::size_t m = n ? n - 1 : 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<bool> o(m);
    for (std::size_t i = 0; i < m; ++i) o[i] = !((mask >> i) & 1);
    out.push_back(o);
  }
  return out;
}

std::string orientation_name(const std::vector<bool>& forward) {
  std::string s;
  for (bool f : forward) s += f ? 'R' : 'L';
  return s;
}

namespace {

using Tab = std::vector<std::vector<std::vector<int>>>;

Algebra<FiniteField> from_products(const Tab& t, const std::vector<int>& unit) {
  FiniteField f(FieldSpec::prime_field(2));
  std::size_t n = unit.size();
  Matrix<FiniteField> table(f, n * n, n), u(f, 1, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int k : t[i][j]) table.at(i * n + j, k) = f.one();
  for (std::size_t i = 0; i < n; ++i) u.at(0, i) = f.from_int(unit[i]);
  return Algebra<FiniteField>::from_structure_constants(f, table, u);
}

}  // namespace

Algebra<FiniteField> species_algebra() {
  Tab t(5, std::vector<std::vector<int>>(5));
  // GF(4) corner with w^2 = w + 1
  t[0][0] = {0};
  t[0][1] = {1};
  t[1][0] = {1};
  t[1][1] = {0, 1};
  // GF(4) acting on the left of E12
  t[0][2] = {2};
  t[0][3] = {3};
  t[1][2] = {3};
  t[1][3] = {2, 3};
  t[2][4] = {2};
  t[3][4] = {3};
  t[4][4] = {4};
  return from_products(t, {1, 0, 0, 0, 1});
}

Algebra<FiniteField> species_algebra_lower() {
  Tab t(5, std::vector<std::vector<int>>(5));
  t[0][0] = {0};
  // E21 and wE21 absorb E11 on the right, GF(4) on the left
  t[1][0] = {1};
  t[2][0] = {2};
  t[3][1] = {1};
  t[3][2] = {2};
  t[4][1] = {2};
  t[4][2] = {1, 2};
  t[3][3] = {3};
  t[3][4] = {4};
  t[4][3] = {4};
  t[4][4] = {3, 4};
  return from_products(t, {1, 0, 0, 1, 0});
}

}  // namespace raddeg
