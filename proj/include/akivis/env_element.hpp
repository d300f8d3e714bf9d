#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "akivis/graded_basis.hpp"
#include "akivis/scalar.hpp"
#include "akivis/superalgebra.hpp"

namespace akivis {

// Basis element of V(M). Degree 0 is the unit; degrees 1..3 are ordered
// supersymmetric words e_{r1}..e_{rn} with r1 <= r2 <= r3 and no repeated
// odd letter; degrees above 3 are formal tensor pairs (left, right) that
// keep their full bracketing.
class PBWMonomial {
 public:
  static constexpr int max_word_degree = 3;

  static PBWMonomial unit() { return PBWMonomial(); }
  // Throws InvalidInput when `letters` is not an ordered basis word and
  // NotApplicable when it is longer than max_word_degree.
  static PBWMonomial word(const GradedBasis& basis, std::vector<std::size_t> letters);
  // Requires both factors of positive degree and total degree above 3.
  static PBWMonomial pair(PBWMonomial left, PBWMonomial right);

  int degree() const { return static_cast<int>(leaves_.size()); }
  Parity parity() const { return parity_; }
  bool is_pair() const { return static_cast<bool>(left_); }

  // Word letters; for pairs the flattened leaves.
  const std::vector<std::size_t>& letters() const { return leaves_; }
  const PBWMonomial& left() const { return *left_; }
  const PBWMonomial& right() const { return *right_; }

  // degree, parity word, generator indices, then left degree and the
  // factors recursively
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b);
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // "1", "e1e2e3", "(e1e2e3 . e4)"
  std::string to_string(const GradedBasis& basis) const;

 private:
  PBWMonomial() = default;

  std::vector<std::size_t> leaves_;
  std::vector<Parity> leaf_parities_;
  Parity parity_ = Parity::even;
  std::shared_ptr<const PBWMonomial> left_;
  std::shared_ptr<const PBWMonomial> right_;
};

using SpecPtr = std::shared_ptr<const AkivisSpec>;

// Sparse linear combination of PBW monomials over one Akivis spec.
class EnvElement {
 public:
  explicit EnvElement(SpecPtr spec) : spec_(std::move(spec)) {}

  static EnvElement monomial(SpecPtr spec, PBWMonomial m, Scalar coeff = 1);
  // Degree-1 image of a vector of M.
  static EnvElement from_vector(SpecPtr spec, const Vector& v);

  const SpecPtr& spec() const { return spec_; }
  const GradedBasis& basis() const { return *spec_->basis(); }
  const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const PBWMonomial& m) const;
  // Highest degree present, -1 for zero.
  int degree() const;
  EnvElement degree_component(int n) const;
  // [even part, odd part]
  std::array<EnvElement, 2> parity_components() const;
  // Coordinates of the degree-1 component as a vector of M.
  Vector degree_one_vector() const;

  void add_term(const PBWMonomial& m, const Scalar& c);

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const Scalar& c);

  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const Scalar& c, EnvElement v) { return v *= c; }

  friend bool operator==(const EnvElement& a, const EnvElement& b);

  // Canonical text: "3/2 e1e2 + -1 (e1e2e3 . e4)", terms in monomial order,
  // "0" for zero.
  std::string to_string() const;

 private:
  void check_spec(const EnvElement& o) const;

  SpecPtr spec_;
  std::map<PBWMonomial, Scalar> terms_;
};

}  // namespace akivis
