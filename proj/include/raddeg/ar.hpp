#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "raddeg/radical.hpp"

namespace raddeg {

class IsProjective : public ModuleError {
 public:
  using ModuleError::ModuleError;
};

class IsInjective : public ModuleError {
 public:
  using ModuleError::ModuleError;
};

class CertificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <ExactField F>
struct ProjectiveCover {
  ModulePtr<F> module;           // direct sum of the chosen e_i A
  Morphism<F> map;               // module -> M, onto, iso on tops
  std::vector<std::size_t> summands;  // index into the standard idempotents, one per generator
};

template <ExactField F>
ProjectiveCover<F> projective_cover(const ModulePtr<F>& m, const StandardModules<F>& sm);

// P1 -> P0 -> M -> 0 with both covers minimal
template <ExactField F>
struct Presentation {
  ProjectiveCover<F> p0;
  Submodule<F> syzygy;  // kernel of p0.map
  ProjectiveCover<F> p1;
  Morphism<F> map;      // P1 -> P0
};

template <ExactField F>
Presentation<F> minimal_projective_presentation(const ModulePtr<F>& m, const StandardModules<F>& sm);

// coker(Hom(P0, A) -> Hom(P1, A)) as a module over `opposite`
template <ExactField F>
ModulePtr<F> transpose(const Presentation<F>& pres, const AlgebraPtr<F>& opposite);

// Ext^1(M, N) = Hom(Omega M, N) / (maps that extend to P0)
template <ExactField F>
struct ExtSpace {
  ModulePtr<F> m, n;
  Presentation<F> pres;
  HomBasis<F> hom;          // Hom(Omega M, N)
  QuotientSpace<F> classes; // inside hom coordinates
  std::size_t dim() const { return classes.dim(); }
};

template <ExactField F>
ExtSpace<F> ext1(const ModulePtr<F>& m, const ModulePtr<F>& n, const StandardModules<F>& sm);

template <ExactField F>
struct ShortExact {
  ModulePtr<F> left, middle, right;
  Morphism<F> inject;   // left -> middle
  Morphism<F> project;  // middle -> right
};

// the pushout of Omega -> P0 along the class (coordinates in ext.classes)
template <ExactField F>
ShortExact<F> extension(const ExtSpace<F>& ext, const Matrix<F>& class_coords);

template <ExactField F>
struct AlmostSplitSequence {
  std::size_t left = 0, right = 0;  // members
  ShortExact<F> seq;
  std::size_t ext_dim = 0;
  std::size_t candidate = 0;  // how many classes were tried before this one
};

// tau, almost split sequences and certification relative to a catalogue
template <ExactField F>
class ArEngine {
 public:
  explicit ArEngine(std::shared_ptr<const Catalogue<F>> c);

  const Catalogue<F>& catalogue() const { return *catalogue_; }
  const AlgebraPtr<F>& algebra() const { return catalogue_->algebra(); }
  const AlgebraPtr<F>& opposite() const { return catalogue_->standard().opposite; }
  const StandardModules<F>& standard() const { return catalogue_->standard(); }
  const StandardModules<F>& standard_opposite() const { return std_op_; }

  bool member_projective(std::size_t i) const { return projective_[i]; }
  bool member_injective(std::size_t i) const { return injective_[i]; }

  ModulePtr<F> tau(const ModulePtr<F>& m) const;          // D Tr, throws IsProjective
  ModulePtr<F> tau_inverse(const ModulePtr<F>& m) const;  // Tr D, throws IsInjective
  std::optional<std::size_t> tau_member(std::size_t i) const;          // nullopt for projectives
  std::optional<std::size_t> tau_inverse_member(std::size_t i) const;  // nullopt for injectives

  // every non-retraction from a member into M factors through g (M a member)
  bool is_right_almost_split(const Morphism<F>& g, std::size_t m) const;
  // every non-section from N into a member factors through j (N a member)
  bool is_left_almost_split(const Morphism<F>& j, std::size_t n) const;

  // the certified sequence 0 -> tau M -> E -> M -> 0; throws IsProjective or CertificationFailed
  std::shared_ptr<const AlmostSplitSequence<F>> almost_split_sequence(std::size_t m) const;
  // the one starting at N; throws IsInjective or CertificationFailed
  std::shared_ptr<const AlmostSplitSequence<F>> almost_split_sequence_from(std::size_t n) const;

 private:
  const SubspaceBasis<F>& end_radical(std::size_t i) const;

  std::shared_ptr<const Catalogue<F>> catalogue_;
  StandardModules<F> std_op_;
  std::vector<bool> projective_, injective_;
  std::vector<std::shared_ptr<const SubspaceBasis<F>>> end_rad_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::optional<std::size_t>> tau_, tau_inv_;
  mutable std::map<std::size_t, std::shared_ptr<const AlmostSplitSequence<F>>> sequences_;
};

// multiplicity of each member in the middle term
template <ExactField F>
std::vector<std::size_t> middle_multiplicities(const RadicalTable<F>& t, const AlmostSplitSequence<F>& s);

struct ArArrow {
  std::size_t source = 0, target = 0;
  std::size_t dim = 0, a = 0, b = 0;
};

struct ArQuiver {
  std::vector<std::string> labels;
  std::vector<std::string> dims;  // dimension vectors "(a,b,...)"
  std::vector<ArArrow> arrows;
  std::vector<std::optional<std::size_t>> tau;
};

template <ExactField F>
ArQuiver ar_quiver(const RadicalTable<F>& t, const ArEngine<F>& e);

std::string to_dot(const ArQuiver& q);

struct CompletenessReport {
  bool complete = true;
  std::vector<std::string> issues;
  std::vector<std::size_t> missing_dims;  // one per missing indecomposable found
};

template <ExactField F>
CompletenessReport completeness_check(std::shared_ptr<const Catalogue<F>> c);

}  // namespace raddeg
