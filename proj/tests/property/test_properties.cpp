#include <doctest.h>

#include <akivis/akivis.hpp>

#include "oracles.hpp"

using namespace akivis;

namespace {

constexpr int kTables = 120;

std::pair<std::size_t, std::size_t> random_shape(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, 3);
  for (;;) {
    auto p = d(rng), q = d(rng);
    if (p + q > 0) return {p, q};
  }
}

Vector random_basis_homogeneous(std::mt19937_64& rng, const BasisPtr& b, Parity& p) {
  for (;;) {
    p = (rng() & 1) ? Parity::odd : Parity::even;
    Vector v = oracles::random_homogeneous(rng, b, p, 0.7);
    if (!v.is_zero()) return v;
  }
}

}  // namespace

TEST_CASE("derived specs of random graded tables satisfy the Akivis identity") {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < kTables; ++t) {
    auto [p, q] = random_shape(rng);
    SuperTable w = oracles::random_table(rng, p, q);
    AkivisSpec s = derive_akivis(w);
    auto r = check_akivis_identity(s);
    CAPTURE(t);
    CHECK(r.passed());
    CHECK(r.checked == s.dim() * s.dim() * s.dim());
    // derive_akivis produces a valid spec, and classification is monotone
    CHECK(check_superanticommutative(s).passed());
    const Classification c = classify(s);
    CHECK(c != Classification::not_akivis);
    if (c == Classification::lie) CHECK(check_malcev_ternary(s).passed());
  }
}

TEST_CASE("super commutator is superanticommutative on homogeneous elements") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    auto [p, q] = random_shape(rng);
    SuperTable w = oracles::random_table(rng, p, q);
    Parity a, b;
    Vector x = random_basis_homogeneous(rng, w.basis(), a);
    Vector y = random_basis_homogeneous(rng, w.basis(), b);
    CHECK(super_commutator(w, x, y) == Scalar(-koszul(a, b)) * super_commutator(w, y, x));
  }
}

TEST_CASE("parity bookkeeping of commutators and associators") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    auto [p, q] = random_shape(rng);
    SuperTable w = oracles::random_table(rng, p, q, 0.7);
    Parity a, b, c;
    Vector x = random_basis_homogeneous(rng, w.basis(), a);
    Vector y = random_basis_homogeneous(rng, w.basis(), b);
    Vector z = random_basis_homogeneous(rng, w.basis(), c);
    Vector comm = super_commutator(w, x, y);
    if (!comm.is_zero()) CHECK(comm.parity() == std::optional<Parity>(a + b));
    Vector assoc = associator(w, x, y, z);
    if (!assoc.is_zero()) CHECK(assoc.parity() == std::optional<Parity>(a + b + c));
  }
}

TEST_CASE("multiply is bilinear") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 40; ++t) {
    auto [p, q] = random_shape(rng);
    SuperTable w = oracles::random_table(rng, p, q, 0.6);
    Vector x = oracles::random_vector(rng, w.basis());
    Vector x2 = oracles::random_vector(rng, w.basis());
    Vector y = oracles::random_vector(rng, w.basis());
    Scalar a = oracles::random_scalar(rng), b = oracles::random_scalar(rng);
    CHECK(multiply(w, a * x + b * x2, y) == a * multiply(w, x, y) + b * multiply(w, x2, y));
    CHECK(multiply(w, y, a * x + b * x2) == a * multiply(w, y, x) + b * multiply(w, y, x2));
  }
}

TEST_CASE("scalar serialization round trip") {
  std::mt19937_64 rng(4321);
  std::uniform_int_distribution<long> big(-1'000'000'000L, 1'000'000'000L);
  for (int t = 0; t < 2000; ++t) {
    long den = big(rng);
    if (den == 0) den = 1;
    Scalar s(big(rng), den);
    CHECK(Scalar::parse(s.to_string()) == s);
  }
  Scalar huge = Scalar::parse("123456789012345678901234567890/987654321098765432109876543211");
  CHECK(Scalar::parse(huge.to_string()) == huge);
}

TEST_CASE("failure witnesses reproduce through the core operations") {
  std::mt19937_64 rng(555);
  int seen = 0;
  for (int t = 0; t < 30; ++t) {
    auto [p, q] = random_shape(rng);
    AkivisSpec s = derive_akivis(oracles::random_table(rng, p, q));
    auto r = check_lie(s);
    for (const auto& w : r.witnesses) {
      ++seen;
      const auto& b = *s.basis();
      Vector x = s.basis_vector(b.index_of(w.tuple[0]));
      Vector y = s.basis_vector(b.index_of(w.tuple[1]));
      Vector z = s.basis_vector(b.index_of(w.tuple[2]));
      const Vector lhs = std::get<Vector>(w.lhs);
      if (w.relation == "ternary")
        CHECK(lhs == ternary_eval(s, x, y, z));
      else
        CHECK(lhs == super_jacobian(s, x, y, z));
      CHECK(lhs != std::get<Vector>(w.rhs));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("star on random specs: embedding relations, bilinearity, parity") {
  std::mt19937_64 rng(8080);
  for (int t = 0; t < 12; ++t) {
    auto [p, q] = random_shape(rng);
    auto spec = std::make_shared<const AkivisSpec>(derive_akivis(oracles::random_table(rng, p, q)));
    Envelope env(spec);
    CAPTURE(t);
    CHECK(verify_embedding_relations(env).passed());
    for (int n = 2; n <= 3; ++n) CHECK(verify_leading_term(env, n).passed());

    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 3; ++j)
        for (const auto& u : env.pbw_basis(i))
          for (const auto& v : env.pbw_basis(j)) {
            auto parts = env.star(u, v).parity_components();
            CHECK(parts[(u.parity() + v.parity()) == Parity::even ? 1 : 0].is_zero());
          }

    Vector x = oracles::random_vector(rng, spec->basis());
    Vector x2 = oracles::random_vector(rng, spec->basis());
    Vector y = oracles::random_vector(rng, spec->basis());
    Scalar a = oracles::random_scalar(rng), b = oracles::random_scalar(rng);
    EnvElement ex = env.embed(x), ex2 = env.embed(x2), ey = env.embed(y);
    CHECK(env.star(a * ex + b * ex2, ey) == a * env.star(ex, ey) + b * env.star(ex2, ey));
    EnvElement w2 = env.star(ex, ey);
    CHECK(env.star(w2, a * ex + b * ex2) == a * env.star(w2, ex) + b * env.star(w2, ex2));
  }
}

TEST_CASE("the bracket of M is recovered by the star commutator on random vectors") {
  std::mt19937_64 rng(31337);
  for (const auto& [name, spec] : oracles::catalog_specs()) {
    Envelope env(spec);
    CAPTURE(name);
    for (int t = 0; t < 10; ++t) {
      Vector x = oracles::random_vector(rng, spec->basis());
      Vector y = oracles::random_vector(rng, spec->basis());
      Vector z = oracles::random_vector(rng, spec->basis());
      CHECK(env.commutator(env.embed(x), env.embed(y)) == env.embed(bracket_eval(*spec, x, y)));
      CHECK(env.associator(env.embed(x), env.embed(y), env.embed(z)) ==
            env.embed(ternary_eval(*spec, x, y, z)));
    }
  }
}
