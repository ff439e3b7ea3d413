#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raddeg/algebra.hpp"

namespace raddeg {

class NotAdmissible : public AlgebraError {
 public:
  NotAdmissible(const std::string& what, int relation = -1) : AlgebraError(what), relation(relation) {}
  int relation;  // offending relation index, or -1
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuiverArrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct RelationTerm {
  long long coefficient = 1;
  std::vector<std::size_t> arrows;  // a path, composed left to right
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<RelationTerm>> relations;
  std::size_t nilpotency_cap = 0;  // every path of this length lies in the ideal

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;
};

struct QuiverPath {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
  auto operator<=>(const QuiverPath&) const = default;
};

std::string path_name(const QuiverPresentation& q, const QuiverPath& p);

template <ExactField F>
struct PathAlgebra {
  QuiverPresentation presentation;
  AlgebraPtr<F> algebra;
  std::vector<QuiverPath> basis_paths;
  std::vector<std::size_t> vertex_basis;                 // basis index of e_v
  std::vector<std::optional<std::size_t>> arrow_basis;   // basis index of each arrow (absent if killed)
};

template <ExactField F>
PathAlgebra<F> from_path_algebra(const F& field, const QuiverPresentation& q);

inline constexpr std::size_t kPathCap = 10000;

}  // namespace raddeg
