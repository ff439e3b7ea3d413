#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raddeg/decompose.hpp"
#include "raddeg/path_algebra.hpp"

namespace raddeg {

class NotNakayama : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotTypeA : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <ExactField F>
struct CatalogueMember {
  std::string label;
  ModulePtr<F> module;
};

// A list of pairwise non-isomorphic indecomposables over one algebra, plus
// the data used to match arbitrary modules against it.
template <ExactField F>
class Catalogue {
 public:
  Catalogue(AlgebraPtr<F> algebra, std::vector<std::string> labels, std::vector<ModulePtr<F>> members,
            std::vector<Matrix<F>> idempotents = {});

  const AlgebraPtr<F>& algebra() const { return algebra_; }
  const F& field() const { return algebra_->field(); }
  std::size_t size() const { return members_.size(); }
  const ModulePtr<F>& member(std::size_t i) const { return members_[i]; }
  const std::vector<ModulePtr<F>>& members() const { return members_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const StandardModules<F>& standard() const { return *standard_; }

  // ranks of the primitive idempotents acting on m; equal for isomorphic modules
  std::vector<std::size_t> signature(const Module<F>& m) const;
  const std::vector<std::size_t>& member_signature(std::size_t i) const { return signatures_[i]; }
  std::string dimension_string(std::size_t i) const;

  // index of the member isomorphic to an indecomposable m
  std::optional<std::size_t> match(const ModulePtr<F>& m) const;
  // iso m -> member
  std::optional<std::pair<std::size_t, Morphism<F>>> match_with_iso(const ModulePtr<F>& m) const;

 private:
  AlgebraPtr<F> algebra_;
  std::vector<std::string> labels_;
  std::vector<ModulePtr<F>> members_;
  std::shared_ptr<const StandardModules<F>> standard_;
  std::vector<std::vector<std::size_t>> signatures_;
};

// e A / e A J^l for every vertex idempotent e and admissible l
template <ExactField F>
Catalogue<F> nakayama_catalogue(const PathAlgebra<F>& pa);

// interval representations of an A_n quiver
template <ExactField F>
Catalogue<F> type_a_catalogue(const PathAlgebra<F>& pa);

template <ExactField F>
ModulePtr<F> interval_module(const PathAlgebra<F>& pa, std::size_t lo, std::size_t hi);

// S2, P1, P1/S2, S1 over the upper triangular GF(4)/GF(2) algebra
Catalogue<FiniteField> species_catalogue();

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

template <ExactField F>
ValidationReport validate(const Catalogue<F>& c);

// throws InvariantViolation naming the first problem
template <ExactField F>
void require_valid(const Catalogue<F>& c);

}  // namespace raddeg
