#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akivis/env_element.hpp"
#include "akivis/envelope.hpp"
#include "akivis/superalgebra.hpp"

namespace akivis {

// Element expressions:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [rational ['*']] factor [('*' | juxtaposition) factor]
//   factor := generator | '[' expr ',' expr ']' | 'A(' expr ',' expr ',' expr ')'
//           | '(' expr ')'
//
// Products are nonassociative, so a chain of three factors must be
// parenthesized: "(e4 * e2) * e3".
struct SourceSpan {
  std::size_t begin;  // 0-based offset
  std::size_t end;
};

struct ExprNode {
  enum class Kind { generator, scale, sum, product, bracket, ternary };
  Kind kind;
  SourceSpan span;
  std::size_t generator = 0;
  Scalar coeff;
  std::vector<std::shared_ptr<const ExprNode>> children;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

// Generators resolve against `basis`. Errors are ParseError with line 1 and
// the 1-based column.
ExprPtr parse_expr(std::string_view text, const GradedBasis& basis);

std::string to_string(const ExprNode& node, const GradedBasis& basis);

// Evaluates in M: brackets and A use the spec's tables; products need the
// underlying product table (pass nullptr when there is none).
Vector eval_in_algebra(const ExprNode& node, const AkivisSpec& akv, const SuperTable* table);

// Evaluates in V(M): products are *, brackets and A are the * super-commutator
// and * associator.
EnvElement eval_in_envelope(const ExprNode& node, const Envelope& env);

}  // namespace akivis
