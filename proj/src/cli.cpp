#include "raddeg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace raddeg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <ExactField F>
std::vector<std::pair<Morphism<F>, Morphism<F>>> parallel_pairs(const RadicalTable<F>& t,
                                                                std::vector<std::string>& names) {
  const auto& c = t.catalogue();
  std::vector<std::pair<Morphism<F>, Morphism<F>>> out;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      auto irr = t.irr_space(x, y);
      if (irr.dim == 0) continue;
      const auto& f1 = irr.basis[0];
      std::string base = c.label(x) + "->" + c.label(y);
      for (std::size_t k = 1; k < irr.basis.size(); ++k) {
        out.push_back({f1, irr.basis[k]});
        names.push_back(base + " #1,#" + std::to_string(k + 1));
      }
      const auto& r2 = t.power(x, y, 2);
      for (std::size_t k = 0; k < r2.dim(); ++k) {
        auto h = t.hom(x, y).element(r2.vector(k));
        out.push_back({f1, Morphism<F>{f1.source, f1.target, f1.matrix + h.matrix}});
        names.push_back(base + " #1,#1+rad2[" + std::to_string(k + 1) + "]");
      }
    }
  return out;
}

}  // namespace

template <ExactField F>
std::vector<TheoremReport> verify_theorem(const RadicalTable<F>& t, const ArEngine<F>& e, const std::string& theorem) {
  std::vector<TheoremReport> out;
  const auto& c = t.catalogue();
  if (theorem == "A" || theorem == "B" || theorem == "degree-kernel" || theorem == "mono-epi") {
    for (const auto& nm : irreducible_fleet(t, e)) {
      if (theorem == "A") out.push_back(graded_kernel_sequence_report(t, nm.map, nm.name));
      if (theorem == "B") out.push_back(theorem_b_report(t, nm.map, nm.name));
      if (theorem == "degree-kernel") out.push_back(degree_kernel_equivalence_check(t, nm.map, nm.name));
      if (theorem == "mono-epi") out.push_back(mono_epi_degree_check(t, nm.map, nm.name));
    }
  } else if (theorem == "shift") {
    for (std::size_t m = 0; m < t.size(); ++m) out.push_back(degree_shift_check(t, e, m));
  } else if (theorem == "kernel-iso") {
    std::vector<std::string> names;
    auto pairs = parallel_pairs(t, names);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      out.push_back(kernel_iso_check(t, pairs[i].first, pairs[i].second, names[i]));
  } else if (theorem == "finite-type") {
    out.push_back(finite_type_report(t, e));
  } else if (theorem == "kernel-comparison") {
    for (std::size_t x = 0; x < t.size(); ++x) {
      std::vector<ModulePtr<F>> ys;
      std::vector<Matrix<F>> cols;
      std::vector<std::string> labels;
      for (std::size_t y = 0; y < t.size(); ++y) {
        auto irr = t.irr_space(x, y);
        if (irr.dim == 0) continue;
        ys.push_back(c.member(y));
        cols.push_back(irr.basis[0].matrix);
        labels.push_back(c.label(y));
      }
      if (ys.size() < 2) continue;
      auto sum = direct_sum(c.algebra(), ys);
      Morphism<F> f{c.member(x), sum.module, Matrix<F>::hstack(t.field(), cols, c.member(x)->dim())};
      std::string name = c.label(x) + "->";
      for (std::size_t i = 0; i < labels.size(); ++i) name += (i ? "+" : "") + labels[i];
      out.push_back(kernel_comparison_check(t, e, f, name));
    }
  } else if (theorem == "C") {
    for (std::size_t len = 1; len <= 4; ++len) {
      std::size_t k = 0;
      for (const auto& p : enumerate_paths(t, len)) {
        std::vector<std::size_t> verts;
        std::string name;
        for (std::size_t s = 0; s < p.size(); ++s) {
          if (s == 0) name = c.label(*c.match(p[0].source));
          name += "->" + c.label(*c.match(p[s].target));
        }
        out.push_back(path_composition_report(t, p, name + " #" + std::to_string(++k)));
      }
    }
  } else {
    throw UsageError("unknown theorem '" + theorem + "'");
  }
  return out;
}

namespace {

struct Options {
  std::string command;
  std::string workspace;
  std::string out_file;
  std::string format = "text";
  bool dot = false;
  std::string morphism;
  std::string side = "left";
  std::string theorem;
  bool all_fixtures = false;
  std::string fixtures_dir = RADDEG_FIXTURE_DIR;
  std::string path;
};

template <ExactField F>
const RadicalTable<F>& table_of(const Workspace<F>& w, RadicalTablePtr<F>& keep) {
  if (!w.catalogue) throw UsageError("workspace " + w.name + " has no catalogue");
  keep = RadicalTable<F>::build(w.catalogue, nilpotency_cap_from_env());
  return *keep;
}

template <ExactField F>
Morphism<F> named_morphism(const Workspace<F>& w, const RadicalTable<F>& t, const ArEngine<F>& e,
                           const std::string& name) {
  if (auto m = w.morphism(name)) return *m;
  for (const auto& nm : irreducible_fleet(t, e))
    if (nm.name == name) return nm.map;
  throw UsageError("unknown morphism '" + name + "'");
}

template <ExactField F>
int run_on(const Workspace<F>& w, const Options& o, std::string& text) {
  const ReportFormat fmt = o.format == "jsonl" ? ReportFormat::jsonl : ReportFormat::text;
  RadicalTablePtr<F> keep;
  if (o.command == "radical-table") {
    const auto& t = table_of(w, keep);
    const auto& c = t.catalogue();
    std::ostringstream os;
    os << "fixture " << w.name << "\nfield " << w.field.spec().name() << "\nN " << t.N() << "\n";
    for (std::size_t i = 0; i < c.size(); ++i)
      os << "member " << c.label(i) << " " << c.dimension_string(i) << " kappa " << t.kappa_dim(i) << "\n";
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = 0; y < c.size(); ++y) {
        os << "rad " << c.label(x) << " -> " << c.label(y) << ":";
        for (std::size_t m = 0; m <= t.N(); ++m) os << " " << t.power(x, y, m).dim();
        os << "\n";
      }
    text = os.str();
    return 0;
  }
  if (o.command == "ar-quiver") {
    const auto& t = table_of(w, keep);
    ArEngine<F> e(w.catalogue);
    auto q = ar_quiver(t, e);
    if (o.dot) {
      text = to_dot(q);
      return 0;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < q.labels.size(); ++i)
      os << "vertex " << q.labels[i] << " " << q.dims[i] << " tau " << (q.tau[i] ? q.labels[*q.tau[i]] : "-")
         << (e.member_projective(i) ? " projective" : "") << (e.member_injective(i) ? " injective" : "") << "\n";
    for (const auto& a : q.arrows)
      os << "arrow " << q.labels[a.source] << " -> " << q.labels[a.target] << " dim " << a.dim << " valuation (" << a.a
         << "," << a.b << ")\n";
    text = os.str();
    return 0;
  }
  if (o.command == "degree") {
    const auto& t = table_of(w, keep);
    ArEngine<F> e(w.catalogue);
    auto f = named_morphism(w, t, e, o.morphism);
    auto d = o.side == "left" ? left_degree(t, f) : right_degree(t, f);
    std::ostringstream os;
    os << "d_" << (o.side == "left" ? "l" : "r") << "(" << o.morphism << ") = " << d.str() << " depth " << d.depth
       << " N " << d.bound;
    if (d.witness)
      os << " witness Z=" << t.catalogue().label(d.witness->z) << " depth(g)=" << d.witness->g_depth
         << " composite depth=" << d.witness->composite_depth.str();
    os << "\n";
    text = os.str();
    return 0;
  }
  if (o.command == "verify") {
    const auto& t = table_of(w, keep);
    ArEngine<F> e(w.catalogue);
    auto reports = verify_theorem(t, e, o.theorem);
    text = format_reports(reports, w.name, fmt);
    return any_violation(reports) ? 2 : 0;
  }
  if (o.command == "compose-path") {
    const auto& t = table_of(w, keep);
    ArEngine<F> e(w.catalogue);
    std::vector<Morphism<F>> path;
    std::stringstream in(o.path);
    for (std::string n; std::getline(in, n, ',');) path.push_back(named_morphism(w, t, e, n));
    if (path.empty()) throw UsageError("--path needs at least one morphism");
    auto r = path_composition_report(t, path, o.path);
    text = format_reports({r}, w.name, fmt);
    return r.verdict == Verdict::violation ? 2 : 0;
  }
  throw UsageError("unknown command '" + o.command + "'");
}

int run_file(const std::string& path, const Options& o, std::string& text) {
  auto ws = parse_workspace(path);
  if (ws.field.kind == FieldSpec::Kind::rationals) return run_on(build_workspace(ws, Rationals(ws.field)), o, text);
  return run_on(build_workspace(ws, FiniteField(ws.field)), o, text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"radical filtrations, degrees and Auslander-Reiten data of finite-dimensional algebras", "raddeg"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool need_workspace) {
    auto* ws = sub->add_option("workspace", o.workspace, "workspace file");
    if (need_workspace) ws->required();
    sub->add_option("--out", o.out_file, "also write the output to FILE");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "jsonl"}));
  };
  auto* rt = app.add_subcommand("radical-table", "dimensions of rad^m between catalogue members");
  common(rt, true);
  auto* aq = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver with valuations and tau");
  common(aq, true);
  aq->add_flag("--dot", o.dot, "emit Graphviz DOT");
  auto* dg = app.add_subcommand("degree", "left or right degree of a named morphism");
  common(dg, true);
  dg->add_option("--morphism", o.morphism, "morphism block name or fleet name X->Y")->required();
  dg->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  auto* vf = app.add_subcommand("verify", "run a theorem verifier over a workspace or every fixture");
  common(vf, false);
  vf->add_option("--theorem", o.theorem, "verifier")->required()->check(CLI::IsMember(kTheorems));
  vf->add_flag("--all-fixtures", o.all_fixtures, "run over every .ws file in the fixtures directory");
  vf->add_option("--fixtures", o.fixtures_dir, "fixtures directory");
  auto* cp = app.add_subcommand("compose-path", "path composition criteria for a path of named morphisms");
  common(cp, true);
  cp->add_option("--path", o.path, "comma-separated morphism names, applied left to right")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }
  for (auto* s : app.get_subcommands()) o.command = s->get_name();

  try {
    std::string text;
    int code = 0;
    if (o.command == "verify" && o.all_fixtures) {
      if (!o.workspace.empty()) throw UsageError("--all-fixtures takes no workspace");
      std::vector<std::string> files;
      for (const auto& entry : std::filesystem::directory_iterator(o.fixtures_dir))
        if (entry.path().extension() == ".ws") files.push_back(entry.path().string());
      std::sort(files.begin(), files.end());
      if (files.empty()) throw UsageError("no .ws files in " + o.fixtures_dir);
      for (const auto& f : files) {
        std::string part;
        code = std::max(code, run_file(f, o, part));
        text += part;
      }
    } else {
      if (o.workspace.empty()) throw UsageError("a workspace file is required");
      code = run_file(o.workspace, o, text);
    }
    out << text;
    if (!o.out_file.empty()) {
      std::ofstream f(o.out_file, std::ios::binary);
      if (!f) throw UsageError("cannot write " + o.out_file);
      f << text;
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const WorkspaceError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const RepInfiniteSuspected& e) {
    err << "error: RepInfiniteSuspected: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

#define RADDEG_INSTANTIATE(F) \
  template std::vector<TheoremReport> verify_theorem(const RadicalTable<F>&, const ArEngine<F>&, const std::string&);
RADDEG_INSTANTIATE(FiniteField)
RADDEG_INSTANTIATE(Rationals)
#undef RADDEG_INSTANTIATE

}  // namespace raddeg
