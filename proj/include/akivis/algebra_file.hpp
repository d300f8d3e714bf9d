#pragma once

#include <string>
#include <string_view>

#include "akivis/catalog.hpp"

namespace akivis {

// Text format for algebra definitions:
//
//   # comment
//   name: octonions
//   kind: product-table          (or: akivis-spec)
//   even: e0 e1 e2 e3
//   odd: e4 e5 e6 e7
//   unit: e0                     (optional, product-table only)
//   e1 e2 = -1 e3                (product or bracket entry)
//   e1 e2 e4 = 2 e7              (ternary entry, akivis-spec only)
//
// Unlisted entries are zero. Coefficients are integers or p/q.
struct AlgebraDocument {
  std::string name;
  Algebra algebra;
};

// Throws ParseError (with line and column) on syntax errors and
// InvalidInput when the table violates a construction invariant.
AlgebraDocument parse_algebra(std::string_view text);
AlgebraDocument load_algebra(const std::string& path);

// Canonical form: fixed header order, entries in basis-index order, zero
// entries omitted. parse_algebra(emit_algebra(d)) reproduces d.
std::string emit_algebra(const AlgebraDocument& doc);

}  // namespace akivis
