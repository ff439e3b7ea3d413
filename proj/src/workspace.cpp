#include "raddeg/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace raddeg {

namespace {

struct Cell {
  std::string text;
  std::size_t column = 0;
};

struct Entry {
  std::string key, value;
  std::size_t line = 0, value_column = 0;
  bool matrix = false;
  std::vector<std::vector<Cell>> rows;
  std::size_t row_line = 0;  // of the first row
};

struct Block {
  std::string kind, name;
  std::size_t line = 0;
  std::vector<Entry> entries;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// cells of "[a b c]" starting at column `col` (1-based) of the row text
std::vector<Cell> row_cells(const std::string& text, std::size_t line, std::size_t col) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw WorkspaceError("matrix row must be written as [a b ...]", line, col);
  std::vector<Cell> out;
  std::size_t i = 1;
  while (i + 1 < text.size()) {
    while (i + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i + 1 >= text.size()) break;
    std::size_t start = i;
    while (i + 1 < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), col + start});
  }
  return out;
}

std::vector<Block> split_blocks(const std::string& text) {
  std::vector<Block> blocks;
  Entry* open = nullptr;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string s = trim(raw);
    const std::size_t col = first + 1;
    if (s.front() == '[' && s.size() > 1 && std::isalpha(static_cast<unsigned char>(s[1]))) {
      if (s.back() != ']') throw WorkspaceError("unterminated section header", line, col);
      auto parts = words(s.substr(1, s.size() - 2));
      Block b;
      b.kind = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) b.name += (i > 1 ? " " : "") + parts[i];
      b.line = line;
      static const std::vector<std::string> kinds{"field", "quiver", "algebra", "catalogue", "module", "morphism"};
      if (std::find(kinds.begin(), kinds.end(), b.kind) == kinds.end())
        throw WorkspaceError("unknown section '" + b.kind + "'", line, col + 1);
      bool named = b.kind == "module" || b.kind == "morphism";
      if (named && b.name.empty()) throw WorkspaceError("section '" + b.kind + "' needs a name", line, col);
      if (!named && !b.name.empty()) throw WorkspaceError("section '" + b.kind + "' takes no name", line, col);
      blocks.push_back(std::move(b));
      open = nullptr;
      continue;
    }
    if (blocks.empty()) throw WorkspaceError("content before the first section", line, col);
    if (s.front() == '[') {
      if (!open) throw WorkspaceError("matrix row without an open matrix key", line, col);
      if (open->rows.empty()) open->row_line = line;
      open->rows.push_back(row_cells(s, line, col));
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw WorkspaceError("expected key = value", line, col);
    Entry e;
    e.key = trim(s.substr(0, eq));
    e.value = trim(s.substr(eq + 1));
    e.line = line;
    e.value_column = col + eq + 1 + (s.size() > eq + 1 ? s.substr(eq + 1).find_first_not_of(' ') : 0);
    if (e.key.empty()) throw WorkspaceError("empty key", line, col);
    e.matrix = e.value.empty();
    blocks.back().entries.push_back(std::move(e));
    open = blocks.back().entries.back().matrix ? &blocks.back().entries.back() : nullptr;
  }
  return blocks;
}

using Canon = std::function<std::string(const std::string&)>;

std::size_t to_size(const std::string& v, std::size_t line, std::size_t col) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size() || x < 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(x);
  } catch (const std::logic_error&) {
    throw WorkspaceError("expected a non-negative integer, got '" + v + "'", line, col);
  }
}

long long to_int(const std::string& v, std::size_t line, std::size_t col) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw WorkspaceError("expected an integer, got '" + v + "'", line, col);
  }
}

MatrixText read_matrix(const Entry& e, const Canon& canon) {
  MatrixText m;
  std::vector<std::vector<Cell>> rows = e.rows;
  std::size_t first_line = e.row_line;
  if (!e.matrix) {
    if (e.value.front() != '[') throw WorkspaceError("'" + e.key + "' expects a matrix", e.line, e.value_column);
    rows = {row_cells(e.value, e.line, e.value_column)};
    first_line = e.line;
  }
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t line = e.matrix ? first_line + r : e.line;
    if (rows[r].size() != m.cols)
      throw WorkspaceError("row has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(m.cols),
                           line, rows[r].empty() ? 1 : rows[r][0].column);
    for (const auto& c : rows[r]) {
      try {
        m.entries.push_back(canon(c.text));
      } catch (const FieldError& ex) {
        throw WorkspaceError(ex.what(), line, c.column);
      }
    }
  }
  return m;
}

const Entry* find(const Block& b, const std::string& key) {
  for (const auto& e : b.entries)
    if (e.key == key) return &e;
  return nullptr;
}

const Entry& need(const Block& b, const std::string& key) {
  auto e = find(b, key);
  if (!e) throw WorkspaceError("section '" + b.kind + "' needs '" + key + "'", b.line, 1);
  return *e;
}

void only_keys(const Block& b, const std::vector<std::string>& prefixes) {
  for (const auto& e : b.entries) {
    bool ok = false;
    for (const auto& p : prefixes) ok = ok || e.key == p || (p.back() == ' ' && e.key.rfind(p, 0) == 0);
    if (!ok) throw WorkspaceError("unknown key '" + e.key + "' in section '" + b.kind + "'", e.line, 1);
  }
}

FieldSpec read_field(const Block& b) {
  only_keys(b, {"kind", "p", "k", "modulus"});
  const auto& kind = need(b, "kind");
  try {
    if (kind.value == "rationals") return FieldSpec::rationals();
    auto pe = need(b, "p");
    int p = static_cast<int>(to_int(pe.value, pe.line, pe.value_column));
    if (kind.value == "prime") return FieldSpec::prime_field(p);
    if (kind.value != "prime_power")
      throw WorkspaceError("field kind must be prime, prime_power or rationals", kind.line, kind.value_column);
    auto ke = need(b, "k");
    int k = static_cast<int>(to_int(ke.value, ke.line, ke.value_column));
    auto s = FieldSpec::prime_power(p, k);
    if (auto me = find(b, "modulus")) {
      s.modulus.clear();
      for (const auto& w : words(me->value)) s.modulus.push_back(static_cast<int>(to_int(w, me->line, me->value_column)));
      if (k > 1) FiniteField check(s);
    }
    return s;
  } catch (const FieldError& ex) {
    auto at = find(b, "modulus");
    if (!at) at = find(b, "p");
    if (at) throw WorkspaceError(ex.what(), at->line, at->value_column);
    throw WorkspaceError(ex.what(), b.line, 1);
  }
}

std::vector<RelationTerm> read_relation(const Entry& e, const QuiverPresentation& q) {
  std::vector<RelationTerm> terms;
  std::string v = e.value;
  std::size_t i = 0;
  while (i < v.size()) {
    while (i < v.size() && v[i] == ' ') ++i;
    if (i >= v.size()) break;
    long long sign = 1;
    if (v[i] == '+' || v[i] == '-') {
      sign = v[i] == '-' ? -1 : 1;
      ++i;
      while (i < v.size() && v[i] == ' ') ++i;
    } else if (!terms.empty()) {
      throw WorkspaceError("expected + or - between relation terms", e.line, e.value_column + i);
    }
    std::size_t start = i;
    while (i < v.size() && v[i] != ' ' && v[i] != '+' && v[i] != '-') ++i;
    std::string term = v.substr(start, i - start);
    const std::size_t col = e.value_column + start;
    RelationTerm t;
    t.coefficient = sign;
    auto star = term.find('*');
    if (star != std::string::npos) {
      t.coefficient *= to_int(term.substr(0, star), e.line, col);
      term = term.substr(star + 1);
    }
    std::stringstream in(term);
    for (std::string a; std::getline(in, a, '.');) {
      auto idx = q.arrow_index(a);
      if (!idx) throw WorkspaceError("unknown arrow '" + a + "' in relation", e.line, col);
      t.arrows.push_back(*idx);
    }
    if (t.arrows.empty()) throw WorkspaceError("empty relation term", e.line, col);
    terms.push_back(t);
  }
  if (terms.empty()) throw WorkspaceError("empty relation", e.line, e.value_column);
  return terms;
}

QuiverPresentation read_quiver(const Block& b, std::vector<std::size_t>& relation_lines) {
  only_keys(b, {"vertices", "arrow ", "relation", "cap"});
  QuiverPresentation q;
  q.vertices = words(need(b, "vertices").value);
  if (q.vertices.empty()) throw WorkspaceError("quiver needs at least one vertex", b.line, 1);
  for (const auto& e : b.entries) {
    if (e.key.rfind("arrow ", 0) != 0) continue;
    auto name = trim(e.key.substr(6));
    auto parts = words(e.value);
    if (parts.size() != 3 || parts[1] != "->")
      throw WorkspaceError("arrow must read 'arrow NAME = SOURCE -> TARGET'", e.line, e.value_column);
    auto s = q.vertex_index(parts[0]), t = q.vertex_index(parts[2]);
    if (!s || !t) throw WorkspaceError("arrow '" + name + "' uses an unknown vertex", e.line, e.value_column);
    if (q.arrow_index(name)) throw WorkspaceError("duplicate arrow '" + name + "'", e.line, 1);
    q.arrows.push_back({name, *s, *t});
  }
  for (const auto& e : b.entries)
    if (e.key == "relation") {
      q.relations.push_back(read_relation(e, q));
      relation_lines.push_back(e.line);
    }
  const auto& cap = need(b, "cap");
  q.nilpotency_cap = to_size(cap.value, cap.line, cap.value_column);
  return q;
}

Canon canonicalizer(const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::rationals) {
    Rationals q(spec);
    return [q](const std::string& s) { return q.to_string(q.parse(s)); };
  }
  FiniteField f(spec);
  return [f](const std::string& s) { return f.to_string(f.parse(s)); };
}

std::string emit_matrix(const std::string& key, const MatrixText& m) {
  std::string s = key + " =\n";
  for (std::size_t r = 0; r < m.rows; ++r) {
    s += "  [";
    for (std::size_t c = 0; c < m.cols; ++c) s += (c ? " " : "") + m.entries[r * m.cols + c];
    s += "]\n";
  }
  return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

bool same_quiver(const QuiverPresentation& a, const QuiverPresentation& b) {
  if (a.vertices != b.vertices || a.nilpotency_cap != b.nilpotency_cap || a.arrows.size() != b.arrows.size() ||
      a.relations.size() != b.relations.size())
    return false;
  for (std::size_t i = 0; i < a.arrows.size(); ++i)
    if (a.arrows[i].name != b.arrows[i].name || a.arrows[i].source != b.arrows[i].source ||
        a.arrows[i].target != b.arrows[i].target)
      return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    if (a.relations[i].size() != b.relations[i].size()) return false;
    for (std::size_t j = 0; j < a.relations[i].size(); ++j)
      if (a.relations[i][j].coefficient != b.relations[i][j].coefficient ||
          a.relations[i][j].arrows != b.relations[i][j].arrows)
        return false;
  }
  return true;
}

}  // namespace

bool WorkspaceFile::operator==(const WorkspaceFile& o) const {
  if (!(field == o.field) || quiver.has_value() != o.quiver.has_value()) return false;
  if (quiver && !same_quiver(*quiver, *o.quiver)) return false;
  return structure == o.structure && builder == o.builder && members == o.members && modules == o.modules &&
         morphisms == o.morphisms;
}

WorkspaceFile parse_workspace_text(const std::string& text, const std::string& name) {
  auto blocks = split_blocks(text);
  WorkspaceFile ws;
  ws.name = name;
  const Block* field = nullptr;
  for (const auto& b : blocks)
    if (b.kind == "field") {
      if (field) throw WorkspaceError("duplicate field block", b.line, 1);
      field = &b;
    }
  if (!field) throw WorkspaceError("missing field block");
  ws.field = read_field(*field);
  auto canon = canonicalizer(ws.field);
  bool saw_catalogue = false;
  for (const auto& b : blocks) {
    if (b.kind == "quiver") {
      if (ws.quiver || ws.structure) throw WorkspaceError("more than one algebra block", b.line, 1);
      ws.quiver = read_quiver(b, ws.relation_lines);
    } else if (b.kind == "algebra") {
      if (ws.quiver || ws.structure) throw WorkspaceError("more than one algebra block", b.line, 1);
      only_keys(b, {"dim", "unit", "table", "idempotents"});
      StructureBlock s;
      const auto& d = need(b, "dim");
      s.dim = to_size(d.value, d.line, d.value_column);
      s.unit = read_matrix(need(b, "unit"), canon);
      s.table = read_matrix(need(b, "table"), canon);
      if (auto e = find(b, "idempotents")) s.idempotents = read_matrix(*e, canon);
      if (s.unit.rows != 1 || s.unit.cols != s.dim) throw WorkspaceError("unit must be one row of length dim", b.line, 1);
      if (s.table.rows != s.dim * s.dim || s.table.cols != s.dim)
        throw WorkspaceError("table must have dim^2 rows of length dim", b.line, 1);
      if (s.idempotents.rows && s.idempotents.cols != s.dim)
        throw WorkspaceError("idempotent rows must have length dim", b.line, 1);
      ws.structure = s;
    } else if (b.kind == "catalogue") {
      if (saw_catalogue) throw WorkspaceError("duplicate catalogue block", b.line, 1);
      saw_catalogue = true;
      only_keys(b, {"builder", "members"});
      const auto& bu = need(b, "builder");
      if (bu.value != "nakayama" && bu.value != "type_a" && bu.value != "listed")
        throw WorkspaceError("builder must be nakayama, type_a or listed", bu.line, bu.value_column);
      ws.builder = bu.value;
      if (auto m = find(b, "members")) ws.members = words(m->value);
      if (ws.builder == "listed" && ws.members.empty()) throw WorkspaceError("listed catalogue needs members", b.line, 1);
    } else if (b.kind == "module") {
      only_keys(b, {"dims", "map ", "action "});
      ModuleBlock m;
      m.name = b.name;
      m.line = b.line;
      if (auto d = find(b, "dims"))
        for (const auto& w : words(d->value)) m.dims.push_back(to_size(w, d->line, d->value_column));
      for (const auto& e : b.entries) {
        if (e.key.rfind("map ", 0) == 0) m.maps.push_back({trim(e.key.substr(4)), read_matrix(e, canon)});
        if (e.key.rfind("action ", 0) == 0) {
          auto i = to_size(trim(e.key.substr(7)), e.line, 8);
          if (i != m.actions.size()) throw WorkspaceError("actions must be listed in basis order", e.line, 1);
          m.actions.push_back(read_matrix(e, canon));
        }
      }
      if (!m.actions.empty() && (!m.dims.empty() || !m.maps.empty()))
        throw WorkspaceError("module gives both actions and a representation", b.line, 1);
      for (const auto& o : ws.modules)
        if (o.name == m.name) throw WorkspaceError("duplicate module '" + m.name + "'", b.line, 1);
      ws.modules.push_back(std::move(m));
    } else if (b.kind == "morphism") {
      only_keys(b, {"source", "target", "matrix"});
      MorphismBlock m;
      m.name = b.name;
      m.line = b.line;
      m.source = need(b, "source").value;
      m.target = need(b, "target").value;
      m.matrix = read_matrix(need(b, "matrix"), canon);
      for (const auto& o : ws.morphisms)
        if (o.name == m.name) throw WorkspaceError("duplicate morphism '" + m.name + "'", b.line, 1);
      ws.morphisms.push_back(std::move(m));
    }
  }
  if (!ws.quiver && !ws.structure) throw WorkspaceError("missing algebra block (quiver or algebra)");
  return ws;
}

WorkspaceFile parse_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorkspaceError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
  try {
    return parse_workspace_text(ss.str(), stem);
  } catch (const WorkspaceError& e) {
    throw WorkspaceError(path + ":" + e.what());
  }
}

std::string emit_workspace(const WorkspaceFile& ws) {
  std::ostringstream os;
  os << "[field]\n";
  switch (ws.field.kind) {
    case FieldSpec::Kind::rationals: os << "kind = rationals\n"; break;
    case FieldSpec::Kind::prime: os << "kind = prime\np = " << ws.field.p << "\n"; break;
    case FieldSpec::Kind::prime_power: {
      os << "kind = prime_power\np = " << ws.field.p << "\nk = " << ws.field.k << "\nmodulus =";
      for (int c : ws.field.modulus) os << " " << c;
      os << "\n";
      break;
    }
  }
  if (ws.quiver) {
    const auto& q = *ws.quiver;
    os << "\n[quiver]\nvertices = " << join(q.vertices, " ") << "\n";
    for (const auto& a : q.arrows) os << "arrow " << a.name << " = " << q.vertices[a.source] << " -> " << q.vertices[a.target] << "\n";
    for (const auto& r : q.relations) {
      os << "relation = ";
      for (std::size_t i = 0; i < r.size(); ++i) {
        long long c = r[i].coefficient;
        if (i) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long long mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << "*";
        std::vector<std::string> names;
        for (auto a : r[i].arrows) names.push_back(q.arrows[a].name);
        os << join(names, ".");
      }
      os << "\n";
    }
    os << "cap = " << q.nilpotency_cap << "\n";
  }
  if (ws.structure) {
    const auto& s = *ws.structure;
    os << "\n[algebra]\ndim = " << s.dim << "\n" << emit_matrix("unit", s.unit) << emit_matrix("table", s.table);
    if (s.idempotents.rows) os << emit_matrix("idempotents", s.idempotents);
  }
  if (ws.builder != "none") {
    os << "\n[catalogue]\nbuilder = " << ws.builder << "\n";
    if (!ws.members.empty()) os << "members = " << join(ws.members, " ") << "\n";
  }
  for (const auto& m : ws.modules) {
    os << "\n[module " << m.name << "]\n";
    if (!m.dims.empty()) {
      os << "dims =";
      for (auto d : m.dims) os << " " << d;
      os << "\n";
    }
    for (const auto& [a, mt] : m.maps) os << emit_matrix("map " + a, mt);
    for (std::size_t i = 0; i < m.actions.size(); ++i) os << emit_matrix("action " + std::to_string(i), m.actions[i]);
  }
  for (const auto& m : ws.morphisms)
    os << "\n[morphism " << m.name << "]\nsource = " << m.source << "\ntarget = " << m.target << "\n"
       << emit_matrix("matrix", m.matrix);
  return os.str();
}

namespace {

template <ExactField F>
Matrix<F> to_matrix(const F& f, const MatrixText& m) {
  Matrix<F> out(f, m.rows, m.cols);
  for (std::size_t i = 0; i < m.entries.size(); ++i) out[i] = f.parse(m.entries[i]);
  return out;
}

template <ExactField F>
bool field_matches(const F& f, const FieldSpec& s) {
  return f.spec() == s;
}

}  // namespace

template <ExactField F>
ModulePtr<F> Workspace<F>::module(const std::string& n) const {
  if (catalogue)
    if (auto i = catalogue->index_of(n)) return catalogue->member(*i);
  auto it = modules.find(n);
  return it == modules.end() ? nullptr : it->second;
}

template <ExactField F>
std::optional<Morphism<F>> Workspace<F>::morphism(const std::string& n) const {
  for (const auto& m : morphisms)
    if (m.name == n) return m.map;
  return std::nullopt;
}

template <ExactField F>
Workspace<F> build_workspace(const WorkspaceFile& ws, const F& field) {
  if (!field_matches(field, ws.field)) throw WorkspaceError("field does not match the workspace");
  Workspace<F> w;
  w.name = ws.name;
  w.field = field;
  if (ws.quiver) {
    try {
      w.path_algebra = from_path_algebra(field, *ws.quiver);
    } catch (const NotAdmissible& ex) {
      std::size_t line = ex.relation >= 0 && static_cast<std::size_t>(ex.relation) < ws.relation_lines.size()
                             ? ws.relation_lines[static_cast<std::size_t>(ex.relation)]
                             : 0;
      throw WorkspaceError(std::string("NotAdmissible: ") + ex.what(), line, 1);
    }
    w.algebra = w.path_algebra->algebra;
  } else {
    const auto& s = *ws.structure;
    try {
      w.algebra = std::make_shared<const Algebra<F>>(
          Algebra<F>::from_structure_constants(field, to_matrix(field, s.table), to_matrix(field, s.unit)));
    } catch (const AlgebraError& ex) {
      throw WorkspaceError(ex.what());
    }
  }
  for (const auto& m : ws.modules) {
    try {
      ModulePtr<F> mod;
      if (!m.actions.empty()) {
        if (m.actions.size() != w.algebra->dim())
          throw WorkspaceError("module needs one action per algebra basis element", m.line, 1);
        std::vector<Matrix<F>> act;
        for (const auto& a : m.actions) act.push_back(to_matrix(field, a));
        mod = Module<F>::create(w.algebra, std::move(act));
      } else {
        if (!w.path_algebra) throw WorkspaceError("dims and maps need a quiver algebra", m.line, 1);
        const auto& q = w.path_algebra->presentation;
        if (m.dims.size() != q.vertices.size()) throw WorkspaceError("dims needs one entry per vertex", m.line, 1);
        std::vector<Matrix<F>> maps;
        for (const auto& a : q.arrows) maps.push_back(Matrix<F>(field, m.dims[a.source], m.dims[a.target]));
        for (const auto& [name, mt] : m.maps) {
          auto idx = q.arrow_index(name);
          if (!idx) throw WorkspaceError("unknown arrow '" + name + "'", m.line, 1);
          auto mat = to_matrix(field, mt);
          if (mat.rows() != maps[*idx].rows() || mat.cols() != maps[*idx].cols())
            throw WorkspaceError("map " + name + " has the wrong shape", m.line, 1);
          maps[*idx] = mat;
        }
        mod = representation_module(*w.path_algebra, m.dims, maps);
      }
      w.modules[m.name] = mod;
    } catch (const ModuleError& ex) {
      throw WorkspaceError(ex.what(), m.line, 1);
    } catch (const AlgebraError& ex) {
      throw WorkspaceError(ex.what(), m.line, 1);
    }
  }
  if (ws.builder == "nakayama" || ws.builder == "type_a") {
    if (!w.path_algebra) throw WorkspaceError(ws.builder + " catalogue needs a quiver algebra");
    try {
      w.catalogue = std::make_shared<const Catalogue<F>>(ws.builder == "nakayama" ? nakayama_catalogue(*w.path_algebra)
                                                                                  : type_a_catalogue(*w.path_algebra));
    } catch (const std::runtime_error& ex) {
      throw WorkspaceError(ex.what());
    }
  } else if (ws.builder == "listed") {
    std::vector<ModulePtr<F>> members;
    for (const auto& n : ws.members) {
      auto it = w.modules.find(n);
      if (it == w.modules.end()) throw WorkspaceError("catalogue member '" + n + "' has no module block");
      members.push_back(it->second);
    }
    std::vector<Matrix<F>> idem;
    if (ws.structure && ws.structure->idempotents.rows) {
      auto m = to_matrix(field, ws.structure->idempotents);
      for (std::size_t i = 0; i < m.rows(); ++i) idem.push_back(m.row(i));
    }
    w.catalogue = std::make_shared<const Catalogue<F>>(w.algebra, ws.members, members, idem);
    require_valid(*w.catalogue);
  }
  for (const auto& m : ws.morphisms) {
    auto s = w.module(m.source), t = w.module(m.target);
    if (!s) throw WorkspaceError("unknown module '" + m.source + "'", m.line, 1);
    if (!t) throw WorkspaceError("unknown module '" + m.target + "'", m.line, 1);
    try {
      w.morphisms.push_back({m.name, make_morphism(s, t, to_matrix(field, m.matrix))});
    } catch (const ModuleError& ex) {
      throw WorkspaceError(ex.what(), m.line, 1);
    }
  }
  return w;
}

template <ExactField F>
MatrixText matrix_text(const Matrix<F>& m) {
  MatrixText t;
  t.rows = m.rows();
  t.cols = m.cols();
  for (std::size_t i = 0; i < m.size(); ++i) t.entries.push_back(m.field().to_string(m[i]));
  return t;
}

template <ExactField F>
ModuleBlock module_block(const std::string& name, const ModulePtr<F>& m) {
  ModuleBlock b;
  b.name = name;
  for (const auto& a : m->actions()) b.actions.push_back(matrix_text(a));
  return b;
}

template <ExactField F>
MorphismBlock morphism_block(const std::string& name, const std::string& source, const std::string& target,
                             const Morphism<F>& f) {
  return {name, source, target, matrix_text(f.matrix), 0};
}

template <ExactField F>
StructureBlock structure_block(const Algebra<F>& a, const std::vector<Matrix<F>>& idempotents) {
  StructureBlock s;
  s.dim = a.dim();
  s.unit = matrix_text(a.unit());
  s.table = matrix_text(a.table());
  if (!idempotents.empty()) s.idempotents = matrix_text(Matrix<F>::vstack(a.field(), idempotents, a.dim()));
  return s;
}

#define RADDEG_INSTANTIATE(F)                                                                                \
  template struct Workspace<F>;                                                                              \
  template Workspace<F> build_workspace(const WorkspaceFile&, const F&);                                     \
  template MatrixText matrix_text(const Matrix<F>&);                                                         \
  template ModuleBlock module_block(const std::string&, const ModulePtr<F>&);                                \
  template MorphismBlock morphism_block(const std::string&, const std::string&, const std::string&,          \
                                        const Morphism<F>&);                                                 \
  template StructureBlock structure_block(const Algebra<F>&, const std::vector<Matrix<F>>&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
