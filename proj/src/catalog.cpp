#include "akivis/catalog.hpp"

#include <array>
#include <charconv>
#include <string>

#include "akivis/errors.hpp"

namespace akivis {

namespace {

// Signed product of quaternion units: e_i e_j = sign * e_k.
struct UnitProduct {
  int sign;
  std::size_t index;
};

UnitProduct quaternion_unit_product(std::size_t i, std::size_t j) {
  if (i == 0) return {1, j};
  if (j == 0) return {1, i};
  if (i == j) return {-1, 0};
  // e1e2 = -e3, e2e3 = -e1, e3e1 = -e2
  const std::size_t k = 6 - i - j;
  const bool cyclic = (j == i % 3 + 1);
  return {cyclic ? -1 : 1, k};
}

using Quat = std::array<Scalar, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  Quat out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (b[j].is_zero()) continue;
      const auto p = quaternion_unit_product(i, j);
      out[p.index] += Scalar(p.sign) * a[i] * b[j];
    }
  }
  return out;
}

Quat qconj(Quat a) {
  for (std::size_t i = 1; i < 4; ++i) a[i] = -a[i];
  return a;
}

Quat qadd(Quat a, const Quat& b, int sign = 1) {
  for (std::size_t i = 0; i < 4; ++i) a[i] += Scalar(sign) * b[i];
  return a;
}

using Oct = std::array<Quat, 2>;

Oct omul(const Oct& x, const Oct& y) {
  const auto& [a, b] = x;
  const auto& [c, d] = y;
  return {qadd(qmul(a, c), qmul(qconj(d), b), -1), qadd(qmul(d, a), qmul(b, qconj(c)))};
}

Oct oct_unit(std::size_t half, std::size_t i) {
  Oct o{};
  o[half][i] = 1;
  return o;
}

BasisPtr matrix_basis(std::size_t n, std::size_t m) {
  const std::size_t size = n + m;
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) even.push_back(matrix_unit_name(i, j, size));
  for (std::size_t i = n + 1; i <= size; ++i)
    for (std::size_t j = n + 1; j <= size; ++j) even.push_back(matrix_unit_name(i, j, size));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = n + 1; j <= size; ++j) odd.push_back(matrix_unit_name(i, j, size));
  for (std::size_t i = n + 1; i <= size; ++i)
    for (std::size_t j = 1; j <= n; ++j) odd.push_back(matrix_unit_name(i, j, size));
  return GradedBasis::make(std::move(even), std::move(odd));
}

// E_ij E_kl = delta_jk sign E_il, with sign = -1 only for the w1 v2 term
// (i, l in the second block, j = k in the first) when twisted.
SuperTable matrix_table(std::size_t n, std::size_t m, bool twisted) {
  if (n == 0 || m == 0) throw InvalidInput("matrix block sizes must be positive");
  const std::size_t size = n + m;
  BasisPtr basis = matrix_basis(n, m);
  auto idx = [&](std::size_t i, std::size_t j) {
    return basis->index_of(matrix_unit_name(i, j, size));
  };
  std::map<PairKey, Vector> product;
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = 1; j <= size; ++j)
      for (std::size_t l = 1; l <= size; ++l) {
        const bool w1v2 = i > n && j <= n && l > n;
        const int sign = (twisted && w1v2) ? -1 : 1;
        product.emplace(PairKey{idx(i, j), idx(j, l)}, Vector::unit(basis, idx(i, l), sign));
      }
  return SuperTable(basis, product);
}

bool parse_two_sizes(std::string_view rest, std::size_t& a, std::size_t& b) {
  const auto dash = rest.find('-');
  if (dash == std::string_view::npos) return false;
  auto parse = [](std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
  };
  return parse(rest.substr(0, dash), a) && parse(rest.substr(dash + 1), b);
}

}  // namespace

AkivisSpec as_akivis(const Algebra& a) {
  if (const auto* t = std::get_if<SuperTable>(&a)) return derive_akivis(*t);
  return std::get<AkivisSpec>(a);
}

std::string matrix_unit_name(std::size_t i, std::size_t j, std::size_t size) {
  if (size <= 9) return "E" + std::to_string(i) + std::to_string(j);
  return "E" + std::to_string(i) + "_" + std::to_string(j);
}

SuperTable build_quaternions() {
  BasisPtr basis = GradedBasis::make({"e0", "e1", "e2", "e3"}, {});
  std::map<PairKey, Vector> product;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto p = quaternion_unit_product(i, j);
      product.emplace(PairKey{i, j}, Vector::unit(basis, p.index, p.sign));
    }
  return SuperTable(basis, product, 0);
}

SuperTable build_octonions() {
  // Basis vectors as pairs: e0..e3 = (q_i, 0), e4 = (0, 1), e_{4+i} = e4 e_i.
  std::array<Oct, 8> units;
  for (std::size_t i = 0; i < 4; ++i) units[i] = oct_unit(0, i);
  units[4] = oct_unit(1, 0);
  for (std::size_t i = 1; i < 4; ++i) units[4 + i] = omul(units[4], units[i]);

  // Every doubled unit is +-(one coordinate); invert that signed permutation.
  std::array<std::pair<std::size_t, int>, 8> coord_to_unit{};
  for (std::size_t u = 0; u < 8; ++u) {
    int found = 0;
    for (std::size_t c = 0; c < 8; ++c) {
      const Scalar& v = units[u][c / 4][c % 4];
      if (v.is_zero()) continue;
      ++found;
      coord_to_unit[c] = {u, v.sign()};
    }
    if (found != 1) throw std::logic_error("doubled octonion unit is not a signed coordinate");
  }

  BasisPtr basis = GradedBasis::make({"e0", "e1", "e2", "e3"}, {"e4", "e5", "e6", "e7"});
  std::map<PairKey, Vector> product;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Oct p = omul(units[i], units[j]);
      Vector v(basis);
      for (std::size_t c = 0; c < 8; ++c) {
        const Scalar& coeff = p[c / 4][c % 4];
        if (coeff.is_zero()) continue;
        const auto [u, sign] = coord_to_unit[c];
        v.add_term(u, Scalar(sign) * coeff);
      }
      product.emplace(PairKey{i, j}, std::move(v));
    }
  return SuperTable(basis, product, 0);
}

AkivisSpec build_malcev_octonions() {
  const SuperTable graded = build_octonions();
  BasisPtr basis = GradedBasis::make({"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}, {});
  std::map<PairKey, Vector> product;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Vector v(basis);
      for (const auto& [k, c] : graded.product(i, j).terms()) v.add_term(k, c);
      product.emplace(PairKey{i, j}, std::move(v));
    }
  const SuperTable ungraded(basis, product, 0);
  std::map<PairKey, Vector> bracket;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      bracket.emplace(PairKey{i, j}, super_commutator(ungraded, ungraded.basis_vector(i),
                                                      ungraded.basis_vector(j)));
  const AkivisSpec lie_part(basis, bracket, {});
  std::map<TripleKey, Vector> ternary;
  const Scalar sixth(1, 6);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        Vector sj = super_jacobian(lie_part, lie_part.basis_vector(i), lie_part.basis_vector(j),
                                   lie_part.basis_vector(k));
        if (!sj.is_zero()) ternary.emplace(TripleKey{i, j, k}, sixth * sj);
      }
  return AkivisSpec(basis, bracket, ternary);
}

SuperTable build_matrix_quasialgebra(std::size_t n, std::size_t m) {
  return matrix_table(n, m, true);
}

SuperTable build_associative_matrix_superalgebra(std::size_t m, std::size_t n) {
  return matrix_table(m, n, false);
}

AkivisSpec build_trivial_akivis(std::size_t p, std::size_t q) {
  if (p + q == 0) throw InvalidInput("trivial Akivis superalgebra needs a generator");
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= p; ++i) even.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= q; ++i) odd.push_back("y" + std::to_string(i));
  return AkivisSpec(GradedBasis::make(std::move(even), std::move(odd)), {}, {});
}

const std::vector<CatalogEntry>& example_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"octonions", "octonions doubled from the quaternions, O_0 = Q, O_1 = e4 Q", 4, 4,
       Classification::proper_akivis, [] { return Algebra(build_octonions()); }},
      {"quaternions", "quaternions, all even", 4, 0, Classification::lie,
       [] { return Algebra(build_quaternions()); }},
      {"malcev-octonions", "ungraded octonion commutator algebra with A = SJ/6", 8, 0,
       Classification::malcev_presented, [] { return Algebra(build_malcev_octonions()); }},
      {"mat-quasi-1-1", "antiassociative 2x2 matrix quasialgebra", 2, 2,
       Classification::proper_akivis, [] { return Algebra(build_matrix_quasialgebra(1, 1)); }},
      {"mat-quasi-2-1", "antiassociative 3x3 matrix quasialgebra", 5, 4,
       Classification::proper_akivis, [] { return Algebra(build_matrix_quasialgebra(2, 1)); }},
      {"mat-super-1-1", "associative 2x2 matrix superalgebra (gl(1|1))", 2, 2,
       Classification::lie,
       [] { return Algebra(build_associative_matrix_superalgebra(1, 1)); }},
      {"trivial-2-2", "zero bracket and ternary map on 2 even and 2 odd generators", 2, 2,
       Classification::lie, [] { return Algebra(build_trivial_akivis(2, 2)); }},
  };
  return catalog;
}

std::optional<Algebra> build_example(std::string_view name) {
  for (const auto& e : example_catalog())
    if (e.name == name) return e.build();
  std::size_t a = 0, b = 0;
  auto family = [&](std::string_view prefix) {
    return name.starts_with(prefix) && parse_two_sizes(name.substr(prefix.size()), a, b);
  };
  if (family("mat-quasi-") && a > 0 && b > 0) return Algebra(build_matrix_quasialgebra(a, b));
  if (family("mat-super-") && a > 0 && b > 0)
    return Algebra(build_associative_matrix_superalgebra(a, b));
  if (family("trivial-") && a + b > 0) return Algebra(build_trivial_akivis(a, b));
  return std::nullopt;
}

}  // namespace akivis
