#pragma once

// Independent reference computations used by the test suites. Nothing here
// calls into the star machinery or the PBW enumeration of the library.

#include <akivis/akivis.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using akivis::BasisPtr;
using akivis::Parity;
using akivis::Scalar;
using akivis::Vector;

// Parses "2 e3 + -1 e0", "-2e3", "0", "x", "-y" over `basis`. Accepts an
// optional integer or p/q coefficient glued to or separated from the symbol.
Vector parse_cell(const BasisPtr& basis, const std::string& text);

// The printed O^A bracket table, rows = left argument, over e0(=1), e1..e7.
const std::vector<std::vector<std::string>>& printed_octonion_table();

// The printed Mat~_{1,1}^A table in the basis a, b, x, y.
const std::vector<std::vector<std::string>>& printed_mat11_table();

// Dense (n+m)x(n+m) matrix over Q.
struct Matrix {
  std::size_t size;
  std::vector<Scalar> a;
  explicit Matrix(std::size_t s) : size(s), a(s * s) {}
  Scalar& at(std::size_t i, std::size_t j) { return a[i * size + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * size + j]; }
};

// Block product of Mat~_{n,m}: the bottom-right block is -w1 v2 + b1 b2 when
// `twisted`; ordinary matrix product otherwise.
Matrix block_product(const Matrix& x, const Matrix& y, std::size_t n, bool twisted);

// Brute-force V^n(M) basis as canonical strings: words for n <= 3 enumerated
// over all n-tuples of generators, pairs above built from all splits.
std::vector<std::string> enumerate_pbw(const akivis::GradedBasis& basis, int n);

// Random rational in {-3..3} / {1..3}, nonzero when requested.
Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false);

// Random vector over `basis` supported on generators of parity `p`.
Vector random_homogeneous(std::mt19937_64& rng, const BasisPtr& basis, Parity p,
                          double density = 0.5);

// Random vector over all generators.
Vector random_vector(std::mt19937_64& rng, const BasisPtr& basis, double density = 0.6);

// Random grading-closed superalgebra on p even and q odd generators.
akivis::SuperTable random_table(std::mt19937_64& rng, std::size_t p, std::size_t q,
                                double density = 0.4);

// Fixed catalog entries as Akivis specs.
struct NamedSpec {
  std::string name;
  akivis::SpecPtr spec;
};
std::vector<NamedSpec> catalog_specs();

// True iff the triple contains a repeated even generator index.
bool has_repeated_even(const akivis::GradedBasis& basis, std::size_t i, std::size_t j,
                       std::size_t k);

}  // namespace oracles
