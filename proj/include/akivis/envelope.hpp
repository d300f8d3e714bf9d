#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akivis/check_report.hpp"
#include "akivis/env_element.hpp"
#include "akivis/superalgebra.hpp"

namespace akivis {

// The envelope is infinite-dimensional; everything is computed degree by
// degree and anything above max_degree raises TruncationError.
struct TruncationPolicy {
  int max_degree = 4;
  std::size_t max_monomials = 4'000'000;

  // Reads AKIVIS_MAX_DEGREE when set; falls back to the defaults.
  static TruncationPolicy from_environment();
};

struct SignedMonomial {
  int sign;
  PBWMonomial monomial;
};

// Sorts a word of at most three generators into Delta order, with a factor
// -1 for every transposition of two odd letters. Returns nullopt when the
// word vanishes in S(M) (an odd letter repeats).
std::optional<SignedMonomial> sym_normalize(const GradedBasis& basis,
                                            std::span<const std::size_t> word);

// Element of the free nonassociative graded tensor algebra: generators,
// scalar multiples, sums and fully parenthesized binary products.
class MagmaTerm {
 public:
  enum class Kind { generator, scaled, sum, product };

  static MagmaTerm generator(BasisPtr basis, std::size_t index);
  static MagmaTerm from_vector(const Vector& v);
  static MagmaTerm zero(BasisPtr basis);

  Kind kind() const;
  const BasisPtr& basis() const { return basis_; }
  std::size_t index() const;                     // generator
  const Scalar& coeff() const;                   // scaled
  const std::vector<MagmaTerm>& children() const;  // scaled: 1, sum: any, product: 2

  // Defined when every summand has the same degree (resp. parity).
  std::optional<int> degree() const;
  std::optional<Parity> parity() const;

  std::string to_string() const;

  friend MagmaTerm operator*(const MagmaTerm& a, const MagmaTerm& b);
  friend MagmaTerm operator+(const MagmaTerm& a, const MagmaTerm& b);
  friend MagmaTerm operator-(const MagmaTerm& a, const MagmaTerm& b);
  friend MagmaTerm operator*(const Scalar& c, const MagmaTerm& t);

 private:
  struct Node;
  MagmaTerm(BasisPtr basis, std::shared_ptr<const Node> node)
      : basis_(std::move(basis)), node_(std::move(node)) {}

  BasisPtr basis_;
  std::shared_ptr<const Node> node_;
};

// V(M) with the * multiplication: the working model of the universal
// enveloping superalgebra.
class Envelope {
 public:
  explicit Envelope(SpecPtr spec, TruncationPolicy policy = {});

  const SpecPtr& spec() const { return spec_; }
  const AkivisSpec& akivis() const { return *spec_; }
  const GradedBasis& basis() const { return *spec_->basis(); }
  const TruncationPolicy& policy() const { return policy_; }

  EnvElement zero() const { return EnvElement(spec_); }
  EnvElement one() const;
  EnvElement generator(std::size_t index) const;
  EnvElement embed(const Vector& v) const { return EnvElement::from_vector(spec_, v); }

  EnvElement star(const EnvElement& u, const EnvElement& v) const;
  EnvElement star(const PBWMonomial& a, const PBWMonomial& b) const;

  // <u, v> = u*v - (-1)^{ab} v*u, extended over parity components.
  EnvElement commutator(const EnvElement& u, const EnvElement& v) const;
  // <u, v, w> = (u*v)*w - u*(v*w)
  EnvElement associator(const EnvElement& u, const EnvElement& v, const EnvElement& w) const;

  // Product of a word of generators in S(M) (so in V(M) for length <= 3).
  EnvElement symmetric_product(std::span<const std::size_t> word) const;

  std::vector<PBWMonomial> pbw_basis(int n) const;
  // Closed recursion; never materializes monomials.
  std::uint64_t graded_dim(int n) const;

 private:
  void check_degree(int n) const;
  EnvElement star_monomials(const PBWMonomial& a, const PBWMonomial& b) const;
  EnvElement gen_gen(std::size_t r, std::size_t s) const;
  EnvElement gen_vec(std::size_t r, const Vector& v) const;
  EnvElement vec_gen(const Vector& v, std::size_t k) const;
  EnvElement word_gen(std::size_t r, std::size_t s, std::size_t k) const;
  EnvElement gen_word(std::size_t r, std::size_t s, std::size_t k) const;

  SpecPtr spec_;
  TruncationPolicy policy_;
};

EnvElement env_eval(const Envelope& env, const MagmaTerm& t);

// Generators of the ideal I for homogeneous x, y, z:
//   x (x) y - (-1)^{ab} y (x) x - [x, y]
//   (x (x) y) (x) z - x (x) (y (x) z) - A(x, y, z)
MagmaTerm commutator_relation(const AkivisSpec& akv, const Vector& x, const Vector& y);
MagmaTerm associator_relation(const AkivisSpec& akv, const Vector& x, const Vector& y,
                              const Vector& z);

// <e_r, e_s> == [e_r, e_s] on all pairs and <e_r, e_s, e_k> == A(e_r, e_s, e_k)
// on all ordered triples.
CheckReport verify_embedding_relations(const Envelope& env, CheckOptions opts = {});

// star(u, v) minus the V(M) product of u and v (the S(M) product for total
// degree <= 3, the tensor pair above).
EnvElement leading_term_remainder(const Envelope& env, const PBWMonomial& u,
                                  const PBWMonomial& v);
// For all basis monomials with deg u + deg v == n, deg u, deg v >= 1: the
// remainder lies in filtration level n - 1.
CheckReport verify_leading_term(const Envelope& env, int n, CheckOptions opts = {});

// Embed v in degree 1 and read it back.
Vector iota_roundtrip(const Envelope& env, const Vector& v);

}  // namespace akivis
