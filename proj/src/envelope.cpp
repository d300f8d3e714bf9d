#include "akivis/envelope.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "akivis/errors.hpp"

namespace akivis {

// ---------------------------------------------------------------------------
// Truncation

TruncationPolicy TruncationPolicy::from_environment() {
  TruncationPolicy p;
  if (const char* raw = std::getenv("AKIVIS_MAX_DEGREE"); raw && *raw) {
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 64)
      throw InvalidInput(std::string("AKIVIS_MAX_DEGREE must be an integer in [1, 64], got '") +
                         raw + "'");
    p.max_degree = static_cast<int>(v);
  }
  return p;
}

// ---------------------------------------------------------------------------
// S(M) normal form

std::optional<SignedMonomial> sym_normalize(const GradedBasis& basis,
                                            std::span<const std::size_t> word) {
  if (word.size() > static_cast<std::size_t>(PBWMonomial::max_word_degree))
    throw NotApplicable("sym_normalize handles words of length at most 3");
  std::vector<std::size_t> w(word.begin(), word.end());
  for (auto i : w)
    if (i >= basis.size()) throw BasisMismatch("generator index out of range");
  int sign = 1;
  // insertion sort, tracking odd-odd transpositions
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      sign *= koszul(basis.parity(w[j - 1]), basis.parity(w[j]));
      std::swap(w[j - 1], w[j]);
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && basis.parity(w[i]) == Parity::odd) return std::nullopt;
  return SignedMonomial{sign, PBWMonomial::word(basis, std::move(w))};
}

// ---------------------------------------------------------------------------
// MagmaTerm

struct MagmaTerm::Node {
  Kind kind;
  std::size_t index = 0;
  Scalar coeff;
  std::vector<MagmaTerm> children;
};

MagmaTerm MagmaTerm::generator(BasisPtr basis, std::size_t index) {
  if (index >= basis->size()) throw BasisMismatch("generator index out of range");
  auto node = std::make_shared<Node>();
  node->kind = Kind::generator;
  node->index = index;
  return MagmaTerm(std::move(basis), std::move(node));
}

MagmaTerm MagmaTerm::zero(BasisPtr basis) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::sum;
  return MagmaTerm(std::move(basis), std::move(node));
}

MagmaTerm MagmaTerm::from_vector(const Vector& v) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::sum;
  for (const auto& [i, c] : v.terms()) node->children.push_back(c * generator(v.basis(), i));
  return MagmaTerm(v.basis(), std::move(node));
}

MagmaTerm::Kind MagmaTerm::kind() const { return node_->kind; }

std::size_t MagmaTerm::index() const {
  if (node_->kind != Kind::generator) throw std::logic_error("not a generator node");
  return node_->index;
}

const Scalar& MagmaTerm::coeff() const {
  if (node_->kind != Kind::scaled) throw std::logic_error("not a scaled node");
  return node_->coeff;
}

const std::vector<MagmaTerm>& MagmaTerm::children() const { return node_->children; }

std::optional<int> MagmaTerm::degree() const {
  switch (node_->kind) {
    case Kind::generator: return 1;
    case Kind::scaled: return node_->children.front().degree();
    case Kind::product: {
      auto l = node_->children[0].degree();
      auto r = node_->children[1].degree();
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
    case Kind::sum: {
      std::optional<int> d;
      for (const auto& c : node_->children) {
        auto cd = c.degree();
        if (!cd || (d && *d != *cd)) return std::nullopt;
        d = cd;
      }
      return d;
    }
  }
  return std::nullopt;
}

std::optional<Parity> MagmaTerm::parity() const {
  switch (node_->kind) {
    case Kind::generator: return basis_->parity(node_->index);
    case Kind::scaled: return node_->children.front().parity();
    case Kind::product: {
      auto l = node_->children[0].parity();
      auto r = node_->children[1].parity();
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
    case Kind::sum: {
      std::optional<Parity> p;
      for (const auto& c : node_->children) {
        auto cp = c.parity();
        if (!cp || (p && *p != *cp)) return std::nullopt;
        p = cp;
      }
      return p;
    }
  }
  return std::nullopt;
}

std::string MagmaTerm::to_string() const {
  switch (node_->kind) {
    case Kind::generator: return basis_->name(node_->index);
    case Kind::scaled: return node_->coeff.to_string() + " " + node_->children[0].to_string();
    case Kind::product:
      return "(" + node_->children[0].to_string() + " (x) " + node_->children[1].to_string() +
             ")";
    case Kind::sum: {
      if (node_->children.empty()) return "0";
      std::string out;
      for (const auto& c : node_->children) {
        if (!out.empty()) out += " + ";
        out += c.to_string();
      }
      return out;
    }
  }
  return {};
}

MagmaTerm operator*(const MagmaTerm& a, const MagmaTerm& b) {
  if (!same_basis(a.basis_, b.basis_)) throw BasisMismatch("terms over different bases");
  auto node = std::make_shared<MagmaTerm::Node>();
  node->kind = MagmaTerm::Kind::product;
  node->children = {a, b};
  return MagmaTerm(a.basis_, std::move(node));
}

MagmaTerm operator+(const MagmaTerm& a, const MagmaTerm& b) {
  if (!same_basis(a.basis_, b.basis_)) throw BasisMismatch("terms over different bases");
  auto node = std::make_shared<MagmaTerm::Node>();
  node->kind = MagmaTerm::Kind::sum;
  node->children = {a, b};
  return MagmaTerm(a.basis_, std::move(node));
}

MagmaTerm operator*(const Scalar& c, const MagmaTerm& t) {
  auto node = std::make_shared<MagmaTerm::Node>();
  node->kind = MagmaTerm::Kind::scaled;
  node->coeff = c;
  node->children = {t};
  return MagmaTerm(t.basis_, std::move(node));
}

MagmaTerm operator-(const MagmaTerm& a, const MagmaTerm& b) { return a + Scalar(-1) * b; }

// ---------------------------------------------------------------------------
// Envelope

Envelope::Envelope(SpecPtr spec, TruncationPolicy policy)
    : spec_(std::move(spec)), policy_(policy) {
  if (!spec_) throw InvalidInput("envelope needs an Akivis spec");
  if (policy_.max_degree < 1) throw InvalidInput("truncation degree must be positive");
}

EnvElement Envelope::one() const {
  return EnvElement::monomial(spec_, PBWMonomial::unit());
}

EnvElement Envelope::generator(std::size_t index) const {
  return EnvElement::monomial(spec_, PBWMonomial::word(basis(), {index}));
}

void Envelope::check_degree(int n) const {
  if (n > policy_.max_degree) throw TruncationError(n, policy_.max_degree);
}

EnvElement Envelope::star(const EnvElement& u, const EnvElement& v) const {
  auto ours = [&](const SpecPtr& p) { return p == spec_ || (p && *p == *spec_); };
  if (!ours(u.spec()) || !ours(v.spec()))
    throw BasisMismatch("envelope elements over a different Akivis spec");
  EnvElement out = zero();
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      check_degree(a.degree() + b.degree());
      const Scalar c = ca * cb;
      const EnvElement product = star_monomials(a, b);
      for (const auto& [m, cm] : product.terms()) out.add_term(m, c * cm);
    }
  }
  if (out.terms().size() > policy_.max_monomials)
    throw TruncationError(out.terms().size(), policy_.max_monomials);
  return out;
}

EnvElement Envelope::star(const PBWMonomial& a, const PBWMonomial& b) const {
  check_degree(a.degree() + b.degree());
  return star_monomials(a, b);
}

EnvElement Envelope::star_monomials(const PBWMonomial& a, const PBWMonomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da == 0) return EnvElement::monomial(spec_, b);
  if (db == 0) return EnvElement::monomial(spec_, a);
  if (da + db > PBWMonomial::max_word_degree)
    return EnvElement::monomial(spec_, PBWMonomial::pair(a, b));
  const auto& la = a.letters();
  const auto& lb = b.letters();
  if (da == 1 && db == 1) return gen_gen(la[0], lb[0]);
  if (da == 2) return word_gen(la[0], la[1], lb[0]);
  return gen_word(la[0], lb[0], lb[1]);
}

EnvElement Envelope::gen_gen(std::size_t r, std::size_t s) const {
  const GradedBasis& B = basis();
  const bool r_odd = B.parity(r) == Parity::odd;
  if (r < s || (r == s && !r_odd)) return EnvElement::monomial(spec_, PBWMonomial::word(B, {r, s}));
  if (r == s) return Scalar(1, 2) * embed(spec_->bracket(r, r));
  EnvElement out = EnvElement::monomial(spec_, PBWMonomial::word(B, {s, r}),
                                        koszul(B.parity(r), B.parity(s)));
  out += embed(spec_->bracket(r, s));
  return out;
}

EnvElement Envelope::gen_vec(std::size_t r, const Vector& v) const {
  EnvElement out = zero();
  for (const auto& [t, c] : v.terms()) out += c * gen_gen(r, t);
  return out;
}

EnvElement Envelope::vec_gen(const Vector& v, std::size_t k) const {
  EnvElement out = zero();
  for (const auto& [t, c] : v.terms()) out += c * gen_gen(t, k);
  return out;
}

// (e_r e_s) * e_k with r <= s, r < s when both are odd.
EnvElement Envelope::word_gen(std::size_t r, std::size_t s, std::size_t k) const {
  const GradedBasis& B = basis();
  const Parity pr = B.parity(r), ps = B.parity(s), pk = B.parity(k);
  auto odd = [](Parity p) { return p == Parity::odd; };
  auto A = [&](std::size_t x, std::size_t y, std::size_t z) {
    return embed(spec_->ternary(x, y, z));
  };
  auto br = [&](std::size_t x, std::size_t y) -> const Vector& { return spec_->bracket(x, y); };
  auto word = [&](std::size_t x, std::size_t y, std::size_t z, int sign) {
    return EnvElement::monomial(spec_, PBWMonomial::word(B, {x, y, z}), sign);
  };

  if (r <= s && s <= k && !(k == s && odd(ps))) return word(r, s, k, 1);

  EnvElement out = zero();
  if (r < s && s == k && odd(ps)) {
    out += A(r, s, s);
    out += Scalar(1, 2) * gen_vec(r, br(s, s));
  } else if (r <= k && k < s && !(r == k && odd(pr))) {
    out += word(r, k, s, koszul(pk, ps));
    out += gen_vec(r, br(s, k));
    out += A(r, s, k);
    out -= Scalar(koszul(ps, pk)) * A(r, k, s);
  } else if (r == k && k < s && odd(pr)) {
    out -= Scalar(1, 2) * vec_gen(br(r, r), s);
    out += gen_vec(r, br(s, r));
    out += A(r, s, r);
    out += A(r, r, s);
  } else if (k < r && r <= s) {
    out += word(k, r, s, koszul(pk, pr + ps));
    out += Scalar(koszul(pk, ps)) * vec_gen(br(r, k), s);
    out += gen_vec(r, br(s, k));
    out -= Scalar(koszul(ps, pk)) * A(r, k, s);
    out += A(r, s, k);
  } else {
    throw std::logic_error("word_gen: no case for (" + B.name(r) + B.name(s) + ")*" + B.name(k));
  }
  return out;
}

// e_r * (e_s e_k) with s <= k, s < k when both are odd.
EnvElement Envelope::gen_word(std::size_t r, std::size_t s, std::size_t k) const {
  const GradedBasis& B = basis();
  const Parity pr = B.parity(r), ps = B.parity(s), pk = B.parity(k);
  auto odd = [](Parity p) { return p == Parity::odd; };
  auto A = [&](std::size_t x, std::size_t y, std::size_t z) {
    return embed(spec_->ternary(x, y, z));
  };
  auto br = [&](std::size_t x, std::size_t y) -> const Vector& { return spec_->bracket(x, y); };
  auto word = [&](std::size_t x, std::size_t y, std::size_t z, int sign) {
    return EnvElement::monomial(spec_, PBWMonomial::word(B, {x, y, z}), sign);
  };

  EnvElement out = zero();
  if (r <= s && s <= k && !(r == s && odd(ps))) {
    out += word(r, s, k, 1);
    out -= A(r, s, k);
  } else if (r == s && s < k && odd(pr)) {
    out += Scalar(1, 2) * vec_gen(br(r, r), k);
    out -= A(r, r, k);
  } else if (s < r && r <= k && !(r == k && odd(pr))) {
    out += word(s, r, k, koszul(pr, ps));
    out -= A(r, s, k);
    out += vec_gen(br(r, s), k);
  } else if (s < r && r == k && odd(pr)) {
    out += Scalar(1, 2) * Scalar(koszul(pr, ps)) * gen_vec(s, br(r, r));
    out += vec_gen(br(r, s), r);
    out -= A(r, s, r);
    out += Scalar(koszul(pr, ps)) * A(s, r, r);
  } else if (s <= k && k < r) {
    out += word(s, k, r, koszul(pr, pk + ps));
    out += Scalar(koszul(pr, ps)) * gen_vec(s, br(r, k));
    out += vec_gen(br(r, s), k);
    out += Scalar(koszul(pr, ps)) * A(s, r, k);
    out -= A(r, s, k);
    out -= Scalar(koszul(ps + pk, pr)) * A(s, k, r);
  } else {
    throw std::logic_error("gen_word: no case for " + B.name(r) + "*(" + B.name(s) + B.name(k) +
                           ")");
  }
  return out;
}

EnvElement Envelope::commutator(const EnvElement& u, const EnvElement& v) const {
  const auto us = u.parity_components();
  const auto vs = v.parity_components();
  EnvElement out = zero();
  for (int a = 0; a < 2; ++a) {
    if (us[a].is_zero()) continue;
    for (int b = 0; b < 2; ++b) {
      if (vs[b].is_zero()) continue;
      out += star(us[a], vs[b]);
      out -= Scalar(koszul(static_cast<Parity>(a), static_cast<Parity>(b))) * star(vs[b], us[a]);
    }
  }
  return out;
}

EnvElement Envelope::associator(const EnvElement& u, const EnvElement& v,
                                const EnvElement& w) const {
  return star(star(u, v), w) - star(u, star(v, w));
}

EnvElement Envelope::symmetric_product(std::span<const std::size_t> word) const {
  auto normal = sym_normalize(basis(), word);
  if (!normal) return zero();
  return EnvElement::monomial(spec_, normal->monomial, normal->sign);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("graded dimension overflows");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("graded dimension overflows");
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

// multisets of size k from p even generators
std::uint64_t multisets(std::uint64_t p, std::uint64_t k) {
  if (k == 0) return 1;
  if (p == 0) return 0;
  return binomial(p + k - 1, k);
}

void enumerate_words(const GradedBasis& basis, std::size_t length, std::vector<std::size_t>& word,
                     std::vector<PBWMonomial>& out) {
  if (word.size() == length) {
    out.push_back(PBWMonomial::word(basis, word));
    return;
  }
  std::size_t start = 0;
  if (!word.empty()) {
    start = word.back();
    if (basis.parity(start) == Parity::odd) ++start;
  }
  for (std::size_t i = start; i < basis.size(); ++i) {
    word.push_back(i);
    enumerate_words(basis, length, word, out);
    word.pop_back();
  }
}

}  // namespace

std::uint64_t Envelope::graded_dim(int n) const {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
  check_degree(n);
  const std::uint64_t p = basis().even_count();
  const std::uint64_t q = basis().odd_count();
  std::vector<std::uint64_t> dims(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 0; d <= n; ++d) {
    std::uint64_t total = 0;
    if (d <= PBWMonomial::max_word_degree) {
      // S^d(M) = sum_j Sym^{d-j}(M_0) (x) Lambda^j(M_1)
      for (std::uint64_t j = 0; j <= static_cast<std::uint64_t>(d); ++j)
        total = checked_add(total, checked_mul(multisets(p, d - j), binomial(q, j)));
    } else {
      for (int i = 1; i < d; ++i) total = checked_add(total, checked_mul(dims[i], dims[d - i]));
    }
    dims[d] = total;
  }
  return dims[n];
}

std::vector<PBWMonomial> Envelope::pbw_basis(int n) const {
  const std::uint64_t expected = graded_dim(n);  // also enforces truncation
  if (expected > policy_.max_monomials) throw TruncationError(expected, policy_.max_monomials);
  std::vector<PBWMonomial> out;
  out.reserve(expected);
  if (n <= PBWMonomial::max_word_degree) {
    std::vector<std::size_t> word;
    enumerate_words(basis(), static_cast<std::size_t>(n), word, out);
    std::sort(out.begin(), out.end());
    return out;
  }
  for (int i = 1; i < n; ++i) {
    const auto left = pbw_basis(i);
    const auto right = pbw_basis(n - i);
    for (const auto& a : left)
      for (const auto& b : right) out.push_back(PBWMonomial::pair(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation and verification

EnvElement env_eval(const Envelope& env, const MagmaTerm& t) {
  if (!same_basis(t.basis(), env.akivis().basis()))
    throw BasisMismatch("term is not over the envelope's generators");
  switch (t.kind()) {
    case MagmaTerm::Kind::generator: return env.generator(t.index());
    case MagmaTerm::Kind::scaled: return t.coeff() * env_eval(env, t.children().front());
    case MagmaTerm::Kind::sum: {
      EnvElement out = env.zero();
      for (const auto& c : t.children()) out += env_eval(env, c);
      return out;
    }
    case MagmaTerm::Kind::product:
      return env.star(env_eval(env, t.children()[0]), env_eval(env, t.children()[1]));
  }
  return env.zero();
}

namespace {

Parity homogeneous_parity(const Vector& v) {
  auto p = v.parity();
  if (!p) throw InvalidInput("relation arguments must be nonzero and homogeneous");
  return *p;
}

}  // namespace

MagmaTerm commutator_relation(const AkivisSpec& akv, const Vector& x, const Vector& y) {
  const int sign = koszul(homogeneous_parity(x), homogeneous_parity(y));
  const MagmaTerm tx = MagmaTerm::from_vector(x);
  const MagmaTerm ty = MagmaTerm::from_vector(y);
  return tx * ty - Scalar(sign) * (ty * tx) - MagmaTerm::from_vector(bracket_eval(akv, x, y));
}

MagmaTerm associator_relation(const AkivisSpec& akv, const Vector& x, const Vector& y,
                              const Vector& z) {
  const MagmaTerm tx = MagmaTerm::from_vector(x);
  const MagmaTerm ty = MagmaTerm::from_vector(y);
  const MagmaTerm tz = MagmaTerm::from_vector(z);
  return (tx * ty) * tz - tx * (ty * tz) - MagmaTerm::from_vector(ternary_eval(akv, x, y, z));
}

CheckReport verify_embedding_relations(const Envelope& env, CheckOptions opts) {
  if (opts.witness_cap == 0) throw InvalidInput("witness cap must be positive");
  CheckReport report;
  report.identity = "embedding-relations";
  report.witness_cap = opts.witness_cap;
  const AkivisSpec& akv = env.akivis();
  const GradedBasis& B = env.basis();
  const std::size_t n = akv.dim();
  std::vector<EnvElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(env.generator(i));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      ++report.checked;
      EnvElement lhs = env.commutator(gens[r], gens[s]);
      EnvElement rhs = env.embed(akv.bracket(r, s));
      if (lhs != rhs) report.record({B.name(r), B.name(s)}, "bracket", lhs, rhs);
    }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const EnvElement rs = env.star(gens[r], gens[s]);
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        EnvElement lhs = env.star(rs, gens[k]) - env.star(gens[r], env.star(gens[s], gens[k]));
        EnvElement rhs = env.embed(akv.ternary(r, s, k));
        if (lhs != rhs) report.record({B.name(r), B.name(s), B.name(k)}, "ternary", lhs, rhs);
      }
    }
  return report;
}

EnvElement leading_term_remainder(const Envelope& env, const PBWMonomial& u,
                                  const PBWMonomial& v) {
  EnvElement product = env.star(u, v);
  if (u.degree() + v.degree() > PBWMonomial::max_word_degree || u.degree() == 0 ||
      v.degree() == 0) {
    const PBWMonomial expected = u.degree() == 0   ? v
                                 : v.degree() == 0 ? u
                                                   : PBWMonomial::pair(u, v);
    return product - EnvElement::monomial(env.spec(), expected);
  }
  std::vector<std::size_t> word = u.letters();
  word.insert(word.end(), v.letters().begin(), v.letters().end());
  return product - env.symmetric_product(word);
}

CheckReport verify_leading_term(const Envelope& env, int n, CheckOptions opts) {
  if (opts.witness_cap == 0) throw InvalidInput("witness cap must be positive");
  CheckReport report;
  report.identity = "leading-term-" + std::to_string(n);
  report.witness_cap = opts.witness_cap;
  const GradedBasis& B = env.basis();
  for (int i = 1; i < n; ++i) {
    const auto left = env.pbw_basis(i);
    const auto right = env.pbw_basis(n - i);
    for (const auto& u : left)
      for (const auto& v : right) {
        ++report.checked;
        EnvElement rem = leading_term_remainder(env, u, v);
        if (rem.degree() >= n)
          report.record({u.to_string(B), v.to_string(B)}, "remainder", rem.degree_component(n),
                        env.zero());
      }
  }
  return report;
}

Vector iota_roundtrip(const Envelope& env, const Vector& v) {
  const EnvElement e = env.embed(v);
  if (e.degree() > 1) throw std::logic_error("embedding left degree 1");
  return e.degree_one_vector();
}

}  // namespace akivis
