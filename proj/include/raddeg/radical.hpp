#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "raddeg/catalogue.hpp"

namespace raddeg {

class RepInfiniteSuspected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = 30;
// RADDEG_CAP if set, else the default
std::size_t nilpotency_cap_from_env();

// depth of a morphism: nullopt means infinite-at-bound (the morphism is zero)
struct Depth {
  std::optional<std::size_t> value;
  bool infinite() const { return !value.has_value(); }
  bool operator==(const Depth&) const = default;
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
};

// a module written as a direct sum of catalogue members
template <ExactField F>
struct EndpointSplit {
  ModulePtr<F> module;
  std::vector<std::size_t> members;
  std::vector<Morphism<F>> inclusions;   // member -> module
  std::vector<Morphism<F>> projections;  // module -> member
};

template <ExactField F>
struct IrrSpace {
  std::size_t source = 0, target = 0;
  std::vector<Morphism<F>> basis;  // representatives of rad / rad^2
  std::size_t dim = 0;             // over the base field
  std::size_t a = 0;               // dim / dim kappa_source
  std::size_t b = 0;               // dim / dim kappa_target
};

template <ExactField F>
struct GradedMap {
  QuotientSpace<F> source;
  QuotientSpace<F> target;
  Matrix<F> matrix;  // source.dim() x target.dim()
};

template <ExactField F>
class RadicalTable;
template <ExactField F>
using RadicalTablePtr = std::shared_ptr<const RadicalTable<F>>;

template <ExactField F>
class RadicalTable {
 public:
  static RadicalTablePtr<F> build(std::shared_ptr<const Catalogue<F>> c, std::size_t cap = kDefaultCap);

  const Catalogue<F>& catalogue() const { return *catalogue_; }
  const std::shared_ptr<const Catalogue<F>>& catalogue_ptr() const { return catalogue_; }
  const F& field() const { return catalogue_->field(); }
  std::size_t size() const { return catalogue_->size(); }
  // least n with rad^n = 0 on all pairs
  std::size_t N() const { return n_; }

  const HomBasis<F>& hom(std::size_t x, std::size_t y) const { return hom_[x * size() + y]; }
  // rad^n(x, y) in the coordinates of hom(x, y); zero for n >= N
  const SubspaceBasis<F>& power(std::size_t x, std::size_t y, std::size_t n) const;
  std::size_t kappa_dim(std::size_t x) const { return kappa_[x]; }

  Depth member_depth(std::size_t x, std::size_t y, const Matrix<F>& coords) const;
  Depth depth(const Morphism<F>& f) const;

  // cached decomposition of an arbitrary module into members
  std::shared_ptr<const EndpointSplit<F>> split(const ModulePtr<F>& m) const;

  // Hom(Z, X) with X split: concatenated member coordinates, and back
  Matrix<F> left_coords(std::size_t z, const Morphism<F>& g, const EndpointSplit<F>& sx) const;
  Morphism<F> left_element(std::size_t z, const EndpointSplit<F>& sx, const Matrix<F>& coords) const;
  SubspaceBasis<F> left_power(std::size_t z, const EndpointSplit<F>& sx, std::size_t n) const;
  // Hom(Y, Z) with Y split
  Matrix<F> right_coords(const EndpointSplit<F>& sy, std::size_t z, const Morphism<F>& h) const;
  Morphism<F> right_element(const EndpointSplit<F>& sy, std::size_t z, const Matrix<F>& coords) const;
  SubspaceBasis<F> right_power(const EndpointSplit<F>& sy, std::size_t z, std::size_t n) const;

  IrrSpace<F> irr_space(std::size_t x, std::size_t y) const;

  // (-) o f from rad^l/rad^{l+1}(Z, X) to rad^{l+d}/rad^{l+d+1}(Z, Y)
  GradedMap<F> graded_map_left(const Morphism<F>& f, std::size_t d, std::size_t z, std::size_t l) const;
  // f o (-) from rad^l/rad^{l+1}(Y, Z) to rad^{l+d}/rad^{l+d+1}(X, Z)
  GradedMap<F> graded_map_right(const Morphism<F>& f, std::size_t d, std::size_t z, std::size_t l) const;

  // graded piece rad^l/rad^{l+1}(Z, M) for an arbitrary M
  QuotientSpace<F> left_graded(std::size_t z, const EndpointSplit<F>& sx, std::size_t l) const;

 private:
  RadicalTable() = default;

  std::shared_ptr<const Catalogue<F>> catalogue_;
  std::size_t n_ = 0;
  std::vector<HomBasis<F>> hom_;
  std::vector<std::vector<SubspaceBasis<F>>> powers_;  // [n][x * size + y]
  std::vector<std::size_t> kappa_;
  mutable std::mutex mutex_;
  mutable std::map<const Module<F>*, std::shared_ptr<const EndpointSplit<F>>> splits_;
};

}  // namespace raddeg
