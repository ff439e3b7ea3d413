#pragma once

#include <string>
#include <vector>

#include "raddeg/path_algebra.hpp"

namespace raddeg {

// k[x]/(x^n): one vertex, one loop
QuiverPresentation truncated_loop(std::size_t n);

// linear A_n; forward[i] orients the i-th arrow from vertex i to i+1, else reversed
QuiverPresentation type_a(std::size_t n, const std::vector<bool>& forward);
QuiverPresentation type_a_linear(std::size_t n);
// all 2^(n-1) orientations in a fixed order
std::vector<std::vector<bool>> type_a_orientations(std::size_t n);
std::string orientation_name(const std::vector<bool>& forward);

// upper triangular [[GF(4), GF(4)], [0, GF(2)]] over GF(2)
// basis: E11, wE11, E12, wE12, E22
Algebra<FiniteField> species_algebra();
// lower triangular [[GF(2), 0], [GF(4), GF(4)]] over GF(2)
// basis: E11, E21, wE21, E22, wE22
Algebra<FiniteField> species_algebra_lower();

}  // namespace raddeg
