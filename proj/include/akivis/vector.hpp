#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "akivis/graded_basis.hpp"
#include "akivis/scalar.hpp"

namespace akivis {

// Sparse element of the free module on a GradedBasis. Zero coefficients are
// never stored.
class Vector {
 public:
  explicit Vector(BasisPtr basis) : basis_(std::move(basis)) {}
  Vector(BasisPtr basis, std::initializer_list<std::pair<std::size_t, Scalar>> terms);

  static Vector unit(BasisPtr basis, std::size_t index, Scalar coeff = 1);

  const BasisPtr& basis() const { return basis_; }
  const std::map<std::size_t, Scalar>& terms() const { return coeffs_; }

  Scalar coeff(std::size_t index) const;
  bool is_zero() const { return coeffs_.empty(); }

  // The zero vector counts as homogeneous with no definite parity.
  bool is_homogeneous() const;
  std::optional<Parity> parity() const;
  // [even part, odd part]
  std::array<Vector, 2> parity_components() const;

  void add_term(std::size_t index, const Scalar& c);

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& c);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
  friend Vector operator-(Vector v) { return v *= Scalar(-1); }

  friend bool operator==(const Vector& a, const Vector& b) {
    return same_basis(a.basis_, b.basis_) && a.coeffs_ == b.coeffs_;
  }

  // "3/2 e1 + -1 e4"; "0" for the zero vector.
  std::string to_string() const;

 private:
  void check_basis(const Vector& o) const;

  BasisPtr basis_;
  std::map<std::size_t, Scalar> coeffs_;
};

// Exact sparse sum of scaled vectors over one basis.
Vector linear_combine(std::span<const std::pair<Scalar, Vector>> terms);

}  // namespace akivis
