#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "akivis/identities.hpp"
#include "akivis/superalgebra.hpp"

namespace akivis {

using Algebra = std::variant<SuperTable, AkivisSpec>;

// Product tables become their W^A; Akivis specs pass through.
AkivisSpec as_akivis(const Algebra& a);

// Quaternions Q = <e0 = 1, e1, e2, e3>, all even, with e1e2 = -e3,
// e2e3 = -e1, e3e1 = -e2.
SuperTable build_quaternions();

// Cayley-Dickson double of the quaternions, (a, b)(c, d) = (ac - d*b, da + bc*),
// graded O_0 = Q and O_1 = e4 Q with e_{4+i} = e4 e_i. The basis is
// e0 = 1, e1..e7.
SuperTable build_octonions();

// Ungraded octonions with bracket xy - yx and ternary SJ / 6 (a Malcev
// algebra in its Akivis presentation).
AkivisSpec build_malcev_octonions();

// (n+m) x (n+m) matrices, chess-board grading, block product whose
// bottom-right block is -w1 v2 + b1 b2. Generators E{i}{j} (1-based), even
// blocks first, row-major within blocks.
SuperTable build_matrix_quasialgebra(std::size_t n, std::size_t m);

// Same basis as above with the ordinary matrix product.
SuperTable build_associative_matrix_superalgebra(std::size_t m, std::size_t n);

// Zero bracket and ternary map on p even generators x1..xp and q odd
// generators y1..yq.
AkivisSpec build_trivial_akivis(std::size_t p, std::size_t q);

std::string matrix_unit_name(std::size_t i, std::size_t j, std::size_t size);

struct CatalogEntry {
  std::string name;
  std::string description;
  std::size_t even_dim;
  std::size_t odd_dim;
  Classification expected;
  std::function<Algebra()> build;
};

// Fixed entries used throughout the tests and golden files.
const std::vector<CatalogEntry>& example_catalog();

// Resolves fixed names and the parametric families "mat-quasi-N-M",
// "mat-super-M-N" and "trivial-P-Q".
std::optional<Algebra> build_example(std::string_view name);

}  // namespace akivis
