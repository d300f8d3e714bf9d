#include "akivis/superalgebra.hpp"

#include <string>

#include "akivis/errors.hpp"

namespace akivis {

namespace {

void require_basis(const BasisPtr& expected, const Vector& v) {
  if (!same_basis(expected, v.basis()))
    throw BasisMismatch("vector is not over the algebra's basis");
}

std::string pair_label(const GradedBasis& b, std::size_t i, std::size_t j) {
  return "(" + b.name(i) + ", " + b.name(j) + ")";
}

std::string triple_label(const GradedBasis& b, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + b.name(i) + ", " + b.name(j) + ", " + b.name(k) + ")";
}

// Entry must be homogeneous of the given parity (zero is always fine).
void require_parity(const Vector& v, Parity expected, const std::string& where) {
  for (const auto& [idx, c] : v.terms()) {
    if (v.basis()->parity(idx) != expected)
      throw InvalidInput("grading closure violated at " + where + ": expected " +
                         to_string(expected) + " entry, got " + v.to_string());
  }
}

template <typename Key>
void check_entry_keys(const std::map<Key, Vector>& entries, const BasisPtr& basis) {
  for (const auto& [key, v] : entries) require_basis(basis, v);
}

}  // namespace

SuperTable::SuperTable(BasisPtr basis, const std::map<PairKey, Vector>& product,
                       std::optional<std::size_t> unit)
    : basis_(std::move(basis)), table_(basis_->size() * basis_->size(), Vector(basis_)),
      unit_(unit) {
  const std::size_t n = dim();
  check_entry_keys(product, basis_);
  for (const auto& [key, v] : product) {
    const auto [i, j] = key;
    if (i >= n || j >= n) throw BasisMismatch("product entry index out of range");
    require_parity(v, basis_->parity(i) + basis_->parity(j), pair_label(*basis_, i, j));
    table_[i * n + j] = v;
  }
  if (unit_) {
    if (*unit_ >= n) throw BasisMismatch("unit index out of range");
    if (basis_->parity(*unit_) != Parity::even) throw InvalidInput("unit must be even");
    for (std::size_t a = 0; a < n; ++a) {
      const Vector ea = Vector::unit(basis_, a);
      if (this->product(*unit_, a) != ea || this->product(a, *unit_) != ea)
        throw InvalidInput("unit axiom fails for " + basis_->name(a));
    }
  }
}

Vector multiply(const SuperTable& w, const Vector& x, const Vector& y) {
  require_basis(w.basis(), x);
  require_basis(w.basis(), y);
  Vector out(w.basis());
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      const Scalar ab = a * b;
      for (const auto& [k, c] : w.product(i, j).terms()) out.add_term(k, ab * c);
    }
  }
  return out;
}

Vector super_commutator(const SuperTable& w, const Vector& x, const Vector& y) {
  const auto xs = x.parity_components();
  const auto ys = y.parity_components();
  Vector out(w.basis());
  for (int a = 0; a < 2; ++a) {
    if (xs[a].is_zero()) continue;
    for (int b = 0; b < 2; ++b) {
      if (ys[b].is_zero()) continue;
      const int sign = koszul(static_cast<Parity>(a), static_cast<Parity>(b));
      out += multiply(w, xs[a], ys[b]);
      out -= Scalar(sign) * multiply(w, ys[b], xs[a]);
    }
  }
  return out;
}

Vector associator(const SuperTable& w, const Vector& x, const Vector& y, const Vector& z) {
  return multiply(w, multiply(w, x, y), z) - multiply(w, x, multiply(w, y, z));
}

AkivisSpec::AkivisSpec(BasisPtr basis, const std::map<PairKey, Vector>& bracket,
                       const std::map<TripleKey, Vector>& ternary, Validation validation)
    : basis_(std::move(basis)),
      bracket_(basis_->size() * basis_->size(), Vector(basis_)),
      ternary_(basis_->size() * basis_->size() * basis_->size(), Vector(basis_)) {
  const std::size_t n = dim();
  check_entry_keys(bracket, basis_);
  check_entry_keys(ternary, basis_);
  for (const auto& [key, v] : bracket) {
    const auto [i, j] = key;
    if (i >= n || j >= n) throw BasisMismatch("bracket entry index out of range");
    require_parity(v, basis_->parity(i) + basis_->parity(j), pair_label(*basis_, i, j));
    bracket_[i * n + j] = v;
  }
  for (const auto& [key, v] : ternary) {
    const auto [i, j, k] = key;
    if (i >= n || j >= n || k >= n) throw BasisMismatch("ternary entry index out of range");
    require_parity(v, basis_->parity(i) + basis_->parity(j) + basis_->parity(k),
                   triple_label(*basis_, i, j, k));
    ternary_[(i * n + j) * n + k] = v;
  }
  if (validation == Validation::strict) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const int sign = koszul(basis_->parity(i), basis_->parity(j));
        Vector sum = this->bracket(i, j);
        sum += Scalar(sign) * this->bracket(j, i);
        if (!sum.is_zero())
          throw InvalidInput("bracket is not superanticommutative at " +
                             pair_label(*basis_, i, j));
      }
    }
  }
}

bool AkivisSpec::ternary_is_zero() const {
  for (const auto& v : ternary_)
    if (!v.is_zero()) return false;
  return true;
}

std::map<PairKey, Vector> AkivisSpec::bracket_entries() const {
  std::map<PairKey, Vector> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!bracket(i, j).is_zero()) out.emplace(PairKey{i, j}, bracket(i, j));
  return out;
}

std::map<TripleKey, Vector> AkivisSpec::ternary_entries() const {
  std::map<TripleKey, Vector> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!ternary(i, j, k).is_zero()) out.emplace(TripleKey{i, j, k}, ternary(i, j, k));
  return out;
}

AkivisSpec derive_akivis(const SuperTable& w) {
  const std::size_t n = w.dim();
  std::map<PairKey, Vector> bracket;
  std::map<TripleKey, Vector> ternary;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = w.basis_vector(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = w.basis_vector(j);
      if (Vector b = super_commutator(w, ei, ej); !b.is_zero())
        bracket.emplace(PairKey{i, j}, std::move(b));
      const Vector eij = multiply(w, ei, ej);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = w.basis_vector(k);
        Vector a = multiply(w, eij, ek) - multiply(w, ei, multiply(w, ej, ek));
        if (!a.is_zero()) ternary.emplace(TripleKey{i, j, k}, std::move(a));
      }
    }
  }
  return AkivisSpec(w.basis(), bracket, ternary);
}

Vector bracket_eval(const AkivisSpec& akv, const Vector& x, const Vector& y) {
  require_basis(akv.basis(), x);
  require_basis(akv.basis(), y);
  Vector out(akv.basis());
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      const Scalar ab = a * b;
      for (const auto& [k, c] : akv.bracket(i, j).terms()) out.add_term(k, ab * c);
    }
  }
  return out;
}

Vector ternary_eval(const AkivisSpec& akv, const Vector& x, const Vector& y, const Vector& z) {
  require_basis(akv.basis(), x);
  require_basis(akv.basis(), y);
  require_basis(akv.basis(), z);
  Vector out(akv.basis());
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      const Scalar ab = a * b;
      for (const auto& [k, c] : z.terms()) {
        const Scalar abc = ab * c;
        for (const auto& [l, d] : akv.ternary(i, j, k).terms()) out.add_term(l, abc * d);
      }
    }
  }
  return out;
}

Vector super_jacobian(const AkivisSpec& akv, const Vector& x, const Vector& y, const Vector& z) {
  const auto xs = x.parity_components();
  const auto ys = y.parity_components();
  const auto zs = z.parity_components();
  Vector out(akv.basis());
  for (int a = 0; a < 2; ++a) {
    if (xs[a].is_zero()) continue;
    for (int b = 0; b < 2; ++b) {
      if (ys[b].is_zero()) continue;
      for (int c = 0; c < 2; ++c) {
        if (zs[c].is_zero()) continue;
        const Parity pa = static_cast<Parity>(a);
        const Parity pb = static_cast<Parity>(b);
        const Parity pc = static_cast<Parity>(c);
        const Vector& u = xs[a];
        const Vector& v = ys[b];
        const Vector& w = zs[c];
        out += bracket_eval(akv, bracket_eval(akv, u, v), w);
        out += Scalar(koszul(pa, pb + pc)) * bracket_eval(akv, bracket_eval(akv, v, w), u);
        out += Scalar(koszul(pc, pb + pa)) * bracket_eval(akv, bracket_eval(akv, w, u), v);
      }
    }
  }
  return out;
}

}  // namespace akivis
