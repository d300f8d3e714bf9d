#include "akivis/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "akivis/errors.hpp"

namespace akivis {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GradedBasis& basis) : text_(text), basis_(basis) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw ParseError(1, at + 1, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(pos_, std::string("expected '") + c + "' before end of input");
      fail(pos_, std::string("expected '") + c + "', got '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool at_ternary() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'A') return false;
    std::size_t j = pos_ + 1;
    if (j < text_.size() && ident_char(text_[j])) return false;
    while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    return j < text_.size() && text_[j] == '(';
  }

  bool at_factor() {
    const char c = peek();
    return c == '[' || c == '(' || ident_start(c);
  }

  static ExprPtr make(ExprNode::Kind kind, SourceSpan span, std::vector<ExprPtr> children = {}) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->span = span;
    n->children = std::move(children);
    return n;
  }

  static ExprPtr scaled(Scalar c, ExprPtr child, std::size_t begin) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::scale;
    n->span = {begin, child->span.end};
    n->coeff = std::move(c);
    n->children = {std::move(child)};
    return n;
  }

  ExprPtr expr() {
    skip_space();
    const std::size_t begin = pos_;
    std::vector<ExprPtr> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      skip_space();
      const std::size_t term_begin = pos_;
      ExprPtr t = term();
      terms.push_back(sign == 1 ? t : scaled(Scalar(-1), t, term_begin));
      const char c = peek();
      if (c != '+' && c != '-') break;
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    if (terms.size() == 1) return terms.front();
    return make(ExprNode::Kind::sum, {begin, pos_}, std::move(terms));
  }

  ExprPtr term() {
    skip_space();
    const std::size_t begin = pos_;
    std::optional<Scalar> coeff;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      if (peek() == '*') ++pos_;
    }
    ExprPtr f = factor();
    if (peek() == '*' || at_factor()) {
      if (peek() == '*') ++pos_;
      ExprPtr g = factor();
      f = make(ExprNode::Kind::product, {f->span.begin, g->span.end}, {f, g});
      if (peek() == '*' || at_factor())
        fail(pos_, "ambiguous nonassociative product; add parentheses");
    }
    if (coeff) return scaled(*coeff, f, begin);
    return f;
  }

  Scalar rational() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) fail(pos_, "malformed rational literal");
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || ident_char(text_[pos_])))
      fail(pos_, "malformed rational literal (only integers and p/q are accepted)");
    try {
      return Scalar::parse(text_.substr(begin, pos_ - begin));
    } catch (const InvalidInput& e) {
      fail(begin, e.what());
    }
  }

  ExprPtr factor() {
    skip_space();
    const std::size_t begin = pos_;
    if (pos_ >= text_.size()) fail(pos_, "expected a generator, '[', 'A(' or '('");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(']');
      return make(ExprNode::Kind::bracket, {begin, pos_}, {a, b});
    }
    if (at_ternary()) {
      ++pos_;
      expect('(');
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(',');
      ExprPtr d = expr();
      expect(')');
      return make(ExprNode::Kind::ternary, {begin, pos_}, {a, b, d});
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (ident_start(c)) {
      std::size_t j = pos_;
      while (j < text_.size() && ident_char(text_[j])) ++j;
      const std::string_view name = text_.substr(pos_, j - pos_);
      auto idx = basis_.find(name);
      if (!idx) fail(pos_, "unknown generator '" + std::string(name) + "'");
      pos_ = j;
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::generator;
      n->span = {begin, pos_};
      n->generator = *idx;
      return n;
    }
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const GradedBasis& basis_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const GradedBasis& basis) {
  return Parser(text, basis).parse();
}

std::string to_string(const ExprNode& node, const GradedBasis& basis) {
  switch (node.kind) {
    case ExprNode::Kind::generator: return basis.name(node.generator);
    case ExprNode::Kind::scale:
      return node.coeff.to_string() + " " + to_string(*node.children[0], basis);
    case ExprNode::Kind::sum: {
      std::string out = "(";
      for (std::size_t i = 0; i < node.children.size(); ++i)
        out += (i ? " + " : "") + to_string(*node.children[i], basis);
      return out + ")";
    }
    case ExprNode::Kind::product:
      return "(" + to_string(*node.children[0], basis) + " * " +
             to_string(*node.children[1], basis) + ")";
    case ExprNode::Kind::bracket:
      return "[" + to_string(*node.children[0], basis) + ", " +
             to_string(*node.children[1], basis) + "]";
    case ExprNode::Kind::ternary:
      return "A(" + to_string(*node.children[0], basis) + ", " +
             to_string(*node.children[1], basis) + ", " + to_string(*node.children[2], basis) +
             ")";
  }
  return {};
}

Vector eval_in_algebra(const ExprNode& node, const AkivisSpec& akv, const SuperTable* table) {
  auto ev = [&](std::size_t i) { return eval_in_algebra(*node.children[i], akv, table); };
  switch (node.kind) {
    case ExprNode::Kind::generator: return akv.basis_vector(node.generator);
    case ExprNode::Kind::scale: return node.coeff * ev(0);
    case ExprNode::Kind::sum: {
      Vector out(akv.basis());
      for (std::size_t i = 0; i < node.children.size(); ++i) out += ev(i);
      return out;
    }
    case ExprNode::Kind::product:
      if (!table) throw InvalidInput("products need a product-table algebra");
      return multiply(*table, ev(0), ev(1));
    case ExprNode::Kind::bracket: return bracket_eval(akv, ev(0), ev(1));
    case ExprNode::Kind::ternary: return ternary_eval(akv, ev(0), ev(1), ev(2));
  }
  return Vector(akv.basis());
}

EnvElement eval_in_envelope(const ExprNode& node, const Envelope& env) {
  auto ev = [&](std::size_t i) { return eval_in_envelope(*node.children[i], env); };
  switch (node.kind) {
    case ExprNode::Kind::generator: return env.generator(node.generator);
    case ExprNode::Kind::scale: return node.coeff * ev(0);
    case ExprNode::Kind::sum: {
      EnvElement out = env.zero();
      for (std::size_t i = 0; i < node.children.size(); ++i) out += ev(i);
      return out;
    }
    case ExprNode::Kind::product: return env.star(ev(0), ev(1));
    case ExprNode::Kind::bracket: return env.commutator(ev(0), ev(1));
    case ExprNode::Kind::ternary: return env.associator(ev(0), ev(1), ev(2));
  }
  return env.zero();
}

}  // namespace akivis
