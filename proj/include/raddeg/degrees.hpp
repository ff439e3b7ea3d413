#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "raddeg/ar.hpp"
#include "raddeg/radical.hpp"

namespace raddeg {

class ZeroMorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotIrreducible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { left, right };

template <ExactField F>
struct DegreeWitness {
  std::size_t z = 0;     // member on the far side
  Morphism<F> g;         // Z -> X (left) or Y -> Z (right)
  std::size_t g_depth = 0;
  Depth composite_depth;  // of g o f (left) or f o g (right)
};

template <ExactField F>
struct DegreeReport {
  Side side = Side::left;
  std::size_t depth = 0;   // of f
  std::size_t bound = 0;   // N
  std::optional<std::size_t> value;  // nullopt: infinite at bound N
  std::optional<DegreeWitness<F>> witness;
  bool finite() const { return value.has_value(); }
  std::string str() const { return value ? std::to_string(*value) : "inf@N=" + std::to_string(bound); }
};

// least m such that some Z and g of depth exactly m have g f one level deeper than m + depth(f)
template <ExactField F>
DegreeReport<F> left_degree(const RadicalTable<F>& t, const Morphism<F>& f);
template <ExactField F>
DegreeReport<F> right_degree(const RadicalTable<F>& t, const Morphism<F>& f);

// in rad, not rad^2, and the residues of the components into (from) each
// isomorphism class are independent over the residue field on the far side
template <ExactField F>
bool is_irreducible(const RadicalTable<F>& t, const Morphism<F>& f);
// the residue tuples are free over kappa_X (x) kappa_Y^op; throws NotIrreducible
template <ExactField F>
bool freely_irreducible_check(const RadicalTable<F>& t, const Morphism<F>& f);

// Ker f written as a sum of members, each inclusion into X of maximal depth
template <ExactField F>
struct KernelGrading {
  Submodule<F> kernel;
  struct Piece {
    std::size_t member = 0;
    Morphism<F> inclusion;  // member -> kernel
    std::size_t depth = 0;  // of member -> kernel -> X
  };
  std::vector<Piece> pieces;  // ordered by depth, then member
};

template <ExactField F>
KernelGrading<F> depth_graded_kernel_decomposition(const RadicalTable<F>& t, const Morphism<F>& f);

// the irreducible maps between two members used by path searches: every
// element of rad \ rad^2 when that set is small, else basis residues and
// their perturbations by rad^2 (then exhaustive is false)
template <ExactField F>
struct IrrChoices {
  std::vector<Morphism<F>> maps;
  bool exhaustive = true;
};

template <ExactField F>
IrrChoices<F> irreducible_maps(const RadicalTable<F>& t, std::size_t x, std::size_t y, std::size_t limit = 256);

template <ExactField F>
struct KernelPath {
  std::vector<std::size_t> vertices;  // members, from the kernel to X
  std::vector<Morphism<F>> maps;
  Morphism<F> composite;              // member K -> member X, a kernel morphism of f
};

// f epi, X indecomposable; throws SearchExhausted
template <ExactField F>
KernelPath<F> find_kernel_path(const RadicalTable<F>& t, const Morphism<F>& f);

enum class Verdict { verified, hypothesis_not_met, violation, inconclusive };
std::string verdict_name(Verdict v);

enum class Status { holds, fails, inconclusive, skipped };
std::string status_name(Status s);

struct Clause {
  std::string name;
  bool hypothesis = false;
  Status status = Status::holds;
  std::string data;
};

struct TheoremReport {
  std::string theorem;
  std::string subject;
  std::vector<Clause> clauses;
  Verdict verdict = Verdict::verified;

  // returns ok so callers can stop at a failed hypothesis
  bool hypothesis(const std::string& name, bool ok, const std::string& data = "");
  void conclusion(const std::string& name, Status s, const std::string& data = "");
  void conclusion(const std::string& name, bool ok, const std::string& data = "") {
    conclusion(name, ok ? Status::holds : Status::fails, data);
  }
  void finish();
};

// Theorem A sequence over an l-range (defaults: n .. N-1)
template <ExactField F>
TheoremReport graded_kernel_sequence_report(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name,
                                            std::optional<std::size_t> lo = {}, std::optional<std::size_t> hi = {});
template <ExactField F>
TheoremReport theorem_b_report(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name);
template <ExactField F>
TheoremReport degree_kernel_equivalence_check(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name);
template <ExactField F>
TheoremReport mono_epi_degree_check(const RadicalTable<F>& t, const Morphism<F>& f, const std::string& name);
template <ExactField F>
TheoremReport degree_shift_check(const RadicalTable<F>& t, const ArEngine<F>& e, std::size_t m);
template <ExactField F>
TheoremReport kernel_iso_check(const RadicalTable<F>& t, const Morphism<F>& f1, const Morphism<F>& f2,
                               const std::string& name);
template <ExactField F>
TheoremReport kernel_comparison_check(const RadicalTable<F>& t, const ArEngine<F>& e, const Morphism<F>& f,
                                      const std::string& name);

template <ExactField F>
struct NamedMorphism {
  std::string name;
  Morphism<F> map;
};

// irreducible maps with an indecomposable endpoint: residue basis maps on
// every arrow, almost split maps, rad P -> P and I -> I/soc I
template <ExactField F>
std::vector<NamedMorphism<F>> irreducible_fleet(const RadicalTable<F>& t, const ArEngine<F>& e);

template <ExactField F>
TheoremReport finite_type_report(const RadicalTable<F>& t, const ArEngine<F>& e);

// path of irreducible maps between members, applied left to right
template <ExactField F>
TheoremReport path_composition_report(const RadicalTable<F>& t, const std::vector<Morphism<F>>& path,
                                      const std::string& name);

// all composable paths of the given length built from irreducible_maps
template <ExactField F>
std::vector<std::vector<Morphism<F>>> enumerate_paths(const RadicalTable<F>& t, std::size_t length,
                                                      std::size_t limit = 256);

}  // namespace raddeg
