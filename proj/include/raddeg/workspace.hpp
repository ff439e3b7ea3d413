#pragma once

// Workspace files: line-oriented `[section]` blocks of `key = value` pairs.
// A key with an empty value opens a matrix written one `[a b c]` row per
// line. Field elements are integers (prime fields), `{c0,c1,..}` coefficient
// lists (extension fields) or `num/den` (rationals). `#` starts a comment.
//
//   [field]            kind = prime | prime_power | rationals, p, k, modulus
//   [quiver]           vertices, `arrow NAME = SRC -> TGT`, relation, cap
//   [algebra]          dim, unit (one row), table (dim^2 rows), idempotents
//   [catalogue]        builder = nakayama | type_a | listed, members
//   [module NAME]      dims and `map ARROW =` (quiver only), or `action I =`
//                      for every algebra basis element
//   [morphism NAME]    source, target, matrix

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "raddeg/catalogue.hpp"
#include "raddeg/degrees.hpp"
#include "raddeg/path_algebra.hpp"

namespace raddeg {

class WorkspaceError : public std::runtime_error {
 public:
  WorkspaceError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
        line(line),
        column(column) {}
  std::size_t line, column;
};

// entries kept as canonical element strings
struct MatrixText {
  std::size_t rows = 0, cols = 0;
  std::vector<std::string> entries;
  bool operator==(const MatrixText&) const = default;
};

struct StructureBlock {
  std::size_t dim = 0;
  MatrixText unit, table, idempotents;
  bool operator==(const StructureBlock&) const = default;
};

struct ModuleBlock {
  std::string name;
  std::vector<std::size_t> dims;                       // quiver algebras
  std::vector<std::pair<std::string, MatrixText>> maps;  // per arrow, quiver algebras
  std::vector<MatrixText> actions;                     // per algebra basis element
  std::size_t line = 0;
  bool operator==(const ModuleBlock& o) const { return name == o.name && dims == o.dims && maps == o.maps && actions == o.actions; }
};

struct MorphismBlock {
  std::string name, source, target;
  MatrixText matrix;
  std::size_t line = 0;
  bool operator==(const MorphismBlock& o) const {
    return name == o.name && source == o.source && target == o.target && matrix == o.matrix;
  }
};

struct WorkspaceFile {
  std::string name;  // file stem, not serialized
  FieldSpec field;
  std::optional<QuiverPresentation> quiver;
  std::vector<std::size_t> relation_lines;
  std::optional<StructureBlock> structure;
  std::string builder = "none";
  std::vector<std::string> members;
  std::vector<ModuleBlock> modules;
  std::vector<MorphismBlock> morphisms;

  bool operator==(const WorkspaceFile& o) const;
};

WorkspaceFile parse_workspace_text(const std::string& text, const std::string& name = "workspace");
WorkspaceFile parse_workspace(const std::string& path);
std::string emit_workspace(const WorkspaceFile& ws);

template <ExactField F>
struct Workspace {
  std::string name;
  F field;
  std::optional<PathAlgebra<F>> path_algebra;
  AlgebraPtr<F> algebra;
  std::shared_ptr<const Catalogue<F>> catalogue;  // null when there is none
  std::map<std::string, ModulePtr<F>> modules;
  std::vector<NamedMorphism<F>> morphisms;

  ModulePtr<F> module(const std::string& name) const;  // catalogue label or module block
  std::optional<Morphism<F>> morphism(const std::string& name) const;
};

// validates and builds; errors carry the offending block's line
template <ExactField F>
Workspace<F> build_workspace(const WorkspaceFile& ws, const F& field);

// blocks describing existing objects, for writing fixtures
template <ExactField F>
MatrixText matrix_text(const Matrix<F>& m);
template <ExactField F>
ModuleBlock module_block(const std::string& name, const ModulePtr<F>& m);
template <ExactField F>
MorphismBlock morphism_block(const std::string& name, const std::string& source, const std::string& target,
                             const Morphism<F>& f);
template <ExactField F>
StructureBlock structure_block(const Algebra<F>& a, const std::vector<Matrix<F>>& idempotents);

}  // namespace raddeg
