#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "akivis/graded_basis.hpp"
#include "akivis/vector.hpp"

namespace akivis {

using PairKey = std::pair<std::size_t, std::size_t>;
using TripleKey = std::tuple<std::size_t, std::size_t, std::size_t>;

// Finite-dimensional superalgebra given by structure constants. Every
// ordered pair of basis elements has an entry (absent entries are zero).
class SuperTable {
 public:
  // Throws InvalidInput on a grading-closure or unit-axiom violation.
  SuperTable(BasisPtr basis, const std::map<PairKey, Vector>& product,
             std::optional<std::size_t> unit = std::nullopt);

  const BasisPtr& basis() const { return basis_; }
  std::size_t dim() const { return basis_->size(); }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  std::optional<std::size_t> unit() const { return unit_; }

  Vector basis_vector(std::size_t i) const { return Vector::unit(basis_, i); }

  friend bool operator==(const SuperTable& a, const SuperTable& b) {
    return same_basis(a.basis_, b.basis_) && a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  BasisPtr basis_;
  std::vector<Vector> table_;
  std::optional<std::size_t> unit_;
};

// Bilinear extension of the structure constants.
Vector multiply(const SuperTable& w, const Vector& x, const Vector& y);

// xy - (-1)^{ab} yx, applied to parity components of x and y.
Vector super_commutator(const SuperTable& w, const Vector& x, const Vector& y);

// (xy)z - x(yz).
Vector associator(const SuperTable& w, const Vector& x, const Vector& y, const Vector& z);

// Candidate Akivis superalgebra: a bracket table and a ternary table over a
// graded basis.
class AkivisSpec {
 public:
  enum class Validation {
    // grading closure of both tables and superanticommutativity of the bracket
    strict,
    // grading closure only; lets tests build specs with a broken bracket
    grading_only,
  };

  AkivisSpec(BasisPtr basis, const std::map<PairKey, Vector>& bracket,
             const std::map<TripleKey, Vector>& ternary,
             Validation validation = Validation::strict);

  const BasisPtr& basis() const { return basis_; }
  std::size_t dim() const { return basis_->size(); }
  const Vector& bracket(std::size_t i, std::size_t j) const { return bracket_[i * dim() + j]; }
  const Vector& ternary(std::size_t i, std::size_t j, std::size_t k) const {
    return ternary_[(i * dim() + j) * dim() + k];
  }

  bool ternary_is_zero() const;

  Vector basis_vector(std::size_t i) const { return Vector::unit(basis_, i); }

  // Sparse views, suitable for re-construction.
  std::map<PairKey, Vector> bracket_entries() const;
  std::map<TripleKey, Vector> ternary_entries() const;

  friend bool operator==(const AkivisSpec& a, const AkivisSpec& b) {
    return same_basis(a.basis_, b.basis_) && a.bracket_ == b.bracket_ &&
           a.ternary_ == b.ternary_;
  }

 private:
  BasisPtr basis_;
  std::vector<Vector> bracket_;
  std::vector<Vector> ternary_;
};

// W -> W^A: bracket = super-commutator, ternary = associator.
AkivisSpec derive_akivis(const SuperTable& w);

Vector bracket_eval(const AkivisSpec& akv, const Vector& x, const Vector& y);
Vector ternary_eval(const AkivisSpec& akv, const Vector& x, const Vector& y, const Vector& z);

// [[x,y],z] + (-1)^{a(b+c)} [[y,z],x] + (-1)^{c(b+a)} [[z,x],y]
Vector super_jacobian(const AkivisSpec& akv, const Vector& x, const Vector& y, const Vector& z);

}  // namespace akivis
