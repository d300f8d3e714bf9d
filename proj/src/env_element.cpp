#include "akivis/env_element.hpp"

#include "akivis/errors.hpp"

namespace akivis {

PBWMonomial PBWMonomial::word(const GradedBasis& basis, std::vector<std::size_t> letters) {
  if (letters.size() > static_cast<std::size_t>(max_word_degree))
    throw NotApplicable("PBW words have length at most 3");
  PBWMonomial m;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (letters[p] >= basis.size()) throw BasisMismatch("generator index out of range");
    if (p > 0) {
      const std::size_t prev = letters[p - 1];
      const bool odd_repeat = prev == letters[p] && basis.parity(prev) == Parity::odd;
      if (prev > letters[p] || odd_repeat)
        throw InvalidInput("letters do not form an ordered PBW word");
    }
    m.leaf_parities_.push_back(basis.parity(letters[p]));
    m.parity_ += basis.parity(letters[p]);
  }
  m.leaves_ = std::move(letters);
  return m;
}

PBWMonomial PBWMonomial::pair(PBWMonomial left, PBWMonomial right) {
  if (left.degree() == 0 || right.degree() == 0 || left.degree() + right.degree() <= max_word_degree)
    throw InvalidInput("tensor pairs need positive factor degrees summing above 3");
  PBWMonomial m;
  m.leaves_ = left.leaves_;
  m.leaves_.insert(m.leaves_.end(), right.leaves_.begin(), right.leaves_.end());
  m.leaf_parities_ = left.leaf_parities_;
  m.leaf_parities_.insert(m.leaf_parities_.end(), right.leaf_parities_.begin(),
                          right.leaf_parities_.end());
  m.parity_ = left.parity_ + right.parity_;
  m.left_ = std::make_shared<const PBWMonomial>(std::move(left));
  m.right_ = std::make_shared<const PBWMonomial>(std::move(right));
  return m;
}

std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.leaf_parities_ <=> b.leaf_parities_; c != 0) return c;
  if (auto c = a.leaves_ <=> b.leaves_; c != 0) return c;
  if (!a.is_pair() || !b.is_pair()) return a.is_pair() <=> b.is_pair();
  if (auto c = a.left_->degree() <=> b.left_->degree(); c != 0) return c;
  if (auto c = *a.left_ <=> *b.left_; c != 0) return c;
  return *a.right_ <=> *b.right_;
}

std::string PBWMonomial::to_string(const GradedBasis& basis) const {
  if (is_pair())
    return "(" + left_->to_string(basis) + " . " + right_->to_string(basis) + ")";
  if (leaves_.empty()) return "1";
  std::string out;
  for (auto i : leaves_) out += basis.name(i);
  return out;
}

EnvElement EnvElement::monomial(SpecPtr spec, PBWMonomial m, Scalar coeff) {
  EnvElement e(std::move(spec));
  e.add_term(m, coeff);
  return e;
}

EnvElement EnvElement::from_vector(SpecPtr spec, const Vector& v) {
  if (!same_basis(spec->basis(), v.basis()))
    throw BasisMismatch("vector is not over the spec's basis");
  EnvElement e(std::move(spec));
  for (const auto& [i, c] : v.terms()) e.add_term(PBWMonomial::word(e.basis(), {i}), c);
  return e;
}

Scalar EnvElement::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

int EnvElement::degree() const {
  // map order is degree-major
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

EnvElement EnvElement::degree_component(int n) const {
  EnvElement out(spec_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == n) out.terms_.emplace(m, c);
  return out;
}

std::array<EnvElement, 2> EnvElement::parity_components() const {
  std::array<EnvElement, 2> parts{EnvElement(spec_), EnvElement(spec_)};
  for (const auto& [m, c] : terms_) parts[bit(m.parity())].terms_.emplace(m, c);
  return parts;
}

Vector EnvElement::degree_one_vector() const {
  Vector v(spec_->basis());
  for (const auto& [m, c] : terms_)
    if (m.degree() == 1) v.add_term(m.letters().front(), c);
  return v;
}

void EnvElement::add_term(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EnvElement::check_spec(const EnvElement& o) const {
  if (spec_ != o.spec_ && !(spec_ && o.spec_ && *spec_ == *o.spec_))
    throw BasisMismatch("envelope elements over different Akivis specs");
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  check_spec(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  check_spec(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const EnvElement& a, const EnvElement& b) {
  if (a.terms_ != b.terms_) return false;
  return a.spec_ == b.spec_ || (a.spec_ && b.spec_ && *a.spec_ == *b.spec_);
}

std::string EnvElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    out += ' ';
    out += m.to_string(basis());
  }
  return out;
}

}  // namespace akivis
