#include "akivis/vector.hpp"

#include "akivis/errors.hpp"

namespace akivis {

Vector::Vector(BasisPtr basis, std::initializer_list<std::pair<std::size_t, Scalar>> terms)
    : basis_(std::move(basis)) {
  for (const auto& [i, c] : terms) add_term(i, c);
}

Vector Vector::unit(BasisPtr basis, std::size_t index, Scalar coeff) {
  Vector v(std::move(basis));
  v.add_term(index, coeff);
  return v;
}

Scalar Vector::coeff(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Scalar() : it->second;
}

bool Vector::is_homogeneous() const {
  if (coeffs_.empty()) return true;
  return basis_->parity(coeffs_.begin()->first) == basis_->parity(coeffs_.rbegin()->first);
}

std::optional<Parity> Vector::parity() const {
  if (coeffs_.empty() || !is_homogeneous()) return std::nullopt;
  return basis_->parity(coeffs_.begin()->first);
}

std::array<Vector, 2> Vector::parity_components() const {
  std::array<Vector, 2> parts{Vector(basis_), Vector(basis_)};
  for (const auto& [i, c] : coeffs_) parts[bit(basis_->parity(i))].coeffs_.emplace(i, c);
  return parts;
}

void Vector::add_term(std::size_t index, const Scalar& c) {
  if (index >= basis_->size())
    throw BasisMismatch("generator index " + std::to_string(index) + " out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void Vector::check_basis(const Vector& o) const {
  if (!same_basis(basis_, o.basis_)) throw BasisMismatch("vectors over different bases");
}

Vector& Vector::operator+=(const Vector& o) {
  check_basis(o);
  for (const auto& [i, c] : o.coeffs_) add_term(i, c);
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  check_basis(o);
  for (const auto& [i, c] : o.coeffs_) add_term(i, -c);
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, v] : coeffs_) v *= c;
  return *this;
}

std::string Vector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    out += ' ';
    out += basis_->name(i);
  }
  return out;
}

Vector linear_combine(std::span<const std::pair<Scalar, Vector>> terms) {
  if (terms.empty()) throw InvalidInput("linear_combine needs at least one term");
  Vector out(terms.front().second.basis());
  for (const auto& [c, v] : terms) {
    Vector scaled = v;
    scaled *= c;
    out += scaled;
  }
  return out;
}

}  // namespace akivis
