// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <akivis/akivis.hpp>
#include <akivis/algebra_file.hpp>
#include <akivis/cli.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace akivis;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

SpecPtr spec_of(const Algebra& a) { return std::make_shared<const AkivisSpec>(as_akivis(a)); }

// 1. Every entry of the printed O^A table.
Outcome octonion_table() {
  Outcome o;
  AkivisSpec oa = derive_akivis(build_octonions());
  const auto& table = oracles::printed_octonion_table();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Vector want = oracles::parse_cell(oa.basis(), table[i][j]);
      if (oa.bracket(i, j) == want)
        ++matched;
      else
        o.require(false, "[" + oa.basis()->name(i) + ", " + oa.basis()->name(j) + "] = " +
                             oa.bracket(i, j).to_string() + ", printed " + want.to_string());
    }
  o.detail = std::to_string(matched) + "/64 entries exact" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 2. Every entry of the printed Mat~_{1,1}^A table in the basis a, b, x, y.
Outcome mat11_table() {
  Outcome o;
  AkivisSpec s = derive_akivis(build_matrix_quasialgebra(1, 1));
  const auto& b = s.basis();
  const Vector E11 = Vector::unit(b, b->index_of("E11"));
  const Vector E22 = Vector::unit(b, b->index_of("E22"));
  const std::vector<Vector> abxy{E11, E11 - E22, Vector::unit(b, b->index_of("E12")),
                                 Vector::unit(b, b->index_of("E21"))};
  const std::vector<std::string> names{"a", "b", "x", "y"};
  auto cell = [&](const std::string& text) {
    // printed cells are multiples of a, b, x, y
    auto local = GradedBasis::make({"a", "b"}, {"x", "y"});
    Vector v = oracles::parse_cell(local, text);
    Vector out(b);
    for (const auto& [idx, c] : v.terms()) out += c * abxy[idx];
    return out;
  };
  const auto& table = oracles::printed_mat11_table();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Vector got = bracket_eval(s, abxy[i], abxy[j]);
      if (got == cell(table[i][j]))
        ++matched;
      else
        o.require(false, "[" + names[i] + ", " + names[j] + "] = " + got.to_string());
    }
  o.detail = std::to_string(matched) + "/16 entries exact" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 3. The four displayed inequalities.
Outcome witness_inequalities() {
  Outcome o;
  AkivisSpec oa = derive_akivis(build_octonions());
  auto e = [&](std::size_t i) { return oa.basis_vector(i); };
  const Vector sj = super_jacobian(oa, e(3), e(7), e(2));
  o.require(!sj.is_zero(), "SJ(e3,e7,e2) vanished");
  auto [l1, r1] = malcev_instance_sides(oa, MalcevPattern::four_element, {e(4), e(2), e(3), e(5)});
  o.require(l1 != r1, "O^A four-element instance holds");

  AkivisSpec m = derive_akivis(build_matrix_quasialgebra(1, 1));
  const auto& b = m.basis();
  const Vector x = Vector::unit(b, b->index_of("E12"));
  const Vector y = Vector::unit(b, b->index_of("E21"));
  const Vector sjm = super_jacobian(m, x, y, x);
  o.require(!sjm.is_zero(), "SJ(x,y,x) vanished");
  auto [l2, r2] = malcev_instance_sides(m, MalcevPattern::squares, {x, y, x, y});
  o.require(l2 != r2, "Mat~ instance holds");
  if (o.ok)
    o.detail = "SJ(e3,e7,e2) = " + sj.to_string() + "; " + l1.to_string() + " != " +
               r1.to_string() + "; SJ(x,y,x) = " + sjm.to_string() + "; " + l2.to_string() +
               " != " + r2.to_string();
  return o;
}

// 4. Akivis identity on catalog and random tables, plus mutation testing.
Outcome akivis_suite() {
  Outcome o;
  for (const auto& [name, spec] : oracles::catalog_specs())
    o.require(check_akivis_identity(*spec).passed(), name + " fails the identity");

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> dim(0, 3);
  int random_tables = 0;
  while (random_tables < 150) {
    const std::size_t p = dim(rng), q = dim(rng);
    if (p + q == 0) continue;
    SuperTable w = oracles::random_table(rng, p, q);
    ++random_tables;
    if (!check_akivis_identity(derive_akivis(w)).passed())
      o.require(false, "random table " + std::to_string(random_tables) + " fails");
  }

  // Mutations: add a random nonzero parity-compatible vector to one uniformly
  // chosen ternary entry of O^A. A mutation at a triple with a repeated even
  // generator cancels in the alternating A-sum and cannot be detected by any
  // instance of the identity (an equivalent mutant); those are counted apart.
  AkivisSpec oa = derive_akivis(build_octonions());
  const auto& basis = oa.basis();
  auto ternary = oa.ternary_entries();
  std::uniform_int_distribution<std::size_t> idx(0, 7);
  const int mutations = 400;
  int killed = 0, equivalent = 0, equivalent_survived = 0, killed_with_witness = 0;
  for (int t = 0; t < mutations; ++t) {
    const std::size_t i = idx(rng), j = idx(rng), k = idx(rng);
    const Parity p = basis->parity(i) + basis->parity(j) + basis->parity(k);
    Vector delta(basis);
    while (delta.is_zero()) delta = oracles::random_homogeneous(rng, basis, p, 0.5);
    auto mutated = ternary;
    mutated.insert_or_assign(TripleKey{i, j, k}, oa.ternary(i, j, k) + delta);
    AkivisSpec mutant(basis, oa.bracket_entries(), mutated);
    const CheckReport r = check_akivis_identity(mutant);
    const bool eq = oracles::has_repeated_even(*basis, i, j, k);
    if (eq) {
      ++equivalent;
      if (r.passed()) ++equivalent_survived;
    }
    if (!r.passed()) {
      ++killed;
      if (!r.witnesses.empty()) ++killed_with_witness;
    }
  }
  const int candidates = mutations - equivalent;
  const double score = candidates ? double(killed) / candidates : 1.0;
  const double raw = double(killed) / mutations;
  o.require(score >= 0.95, "mutation score below 95%");
  o.require(equivalent_survived == equivalent, "an expected-equivalent mutant was detected");
  o.require(killed_with_witness == killed, "a failing mutant carried no witness");
  std::ostringstream d;
  d.precision(4);
  d << example_catalog().size() << " catalog specs, " << random_tables << " random tables <= (3|3); mutants: " << killed
    << "/" << candidates << " non-equivalent killed (score " << 100 * score << "%), "
    << equivalent << " equivalent all survived, raw kill rate " << 100 * raw << "%";
  o.detail = d.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 5. Star commutators and associators reproduce the bracket and A.
Outcome embedding() {
  Outcome o;
  struct Case {
    std::string name;
    SpecPtr spec;
    std::size_t pairs;
  };
  const std::vector<Case> cases{
      {"octonions", spec_of(build_octonions()), 64},
      {"mat-quasi-1-1", spec_of(build_matrix_quasialgebra(1, 1)), 16},
      {"mat-super-1-1 (A = 0)", spec_of(build_associative_matrix_superalgebra(1, 1)), 16},
      {"trivial-2-2", std::make_shared<const AkivisSpec>(build_trivial_akivis(2, 2)), 16},
  };
  std::string summary;
  for (const auto& c : cases) {
    const CheckReport r = verify_embedding_relations(Envelope(c.spec));
    const std::size_t n = c.spec->dim();
    o.require(r.passed(), c.name + " has " + std::to_string(r.failures) + " failures");
    o.require(r.checked == c.pairs + n * n * n, c.name + " check count");
    summary += (summary.empty() ? "" : ", ") + c.name + " " + std::to_string(r.checked) + " checks";
  }
  o.detail = summary + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 6. Graded dimensions against brute-force enumeration.
Outcome dimensions() {
  Outcome o;
  std::string oct;
  for (const auto& [name, spec] : oracles::catalog_specs()) {
    Envelope env(spec);
    for (int n = 0; n <= 4; ++n) {
      const auto oracle = oracles::enumerate_pbw(env.basis(), n).size();
      if (env.graded_dim(n) != oracle || env.pbw_basis(n).size() != oracle)
        o.require(false, name + " n=" + std::to_string(n));
      if (name == "octonions" && n >= 1) oct += (n > 1 ? "," : "") + std::to_string(oracle);
    }
    if (name == "octonions") {
      o.require(env.graded_dim(1) == 8, "octonion dim 1 != 8");
      o.require(env.graded_dim(2) == 32, "octonion dim 2 != 32");
    }
  }
  o.detail = "all catalog specs n <= 4; octonions d1..d4 = " + oct +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 7. Leading-term property.
Outcome leading_term() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& [name, spec] : oracles::catalog_specs()) {
    Envelope env(spec);
    for (int n = 2; n <= 3; ++n) {
      const CheckReport r = verify_leading_term(env, n);
      total += r.checked;
      o.require(r.passed(), name + " n=" + std::to_string(n));
    }
  }
  Envelope triv(std::make_shared<const AkivisSpec>(build_trivial_akivis(2, 2)));
  std::size_t trivial_pairs = 0;
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i < n; ++i)
      for (const auto& u : triv.pbw_basis(i))
        for (const auto& v : triv.pbw_basis(n - i)) {
          ++trivial_pairs;
          o.require(leading_term_remainder(triv, u, v).is_zero(), "trivial remainder nonzero");
        }
  o.detail = std::to_string(total) + " degree splits on catalog specs; trivial spec remainder zero on " +
             std::to_string(trivial_pairs) + " pairs" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 8. iota round trip.
Outcome injectivity() {
  Outcome o;
  std::mt19937_64 rng(8888);
  std::size_t total = 0;
  for (const auto& [name, spec] : oracles::catalog_specs()) {
    Envelope env(spec);
    for (int t = 0; t < 1000; ++t) {
      const Vector v = oracles::random_vector(rng, spec->basis());
      ++total;
      if (iota_roundtrip(env, v) != v) o.require(false, name + " " + v.to_string());
    }
  }
  o.detail = std::to_string(total) + " random vectors" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 9. CLI contract: in-process round trips and determinism, then the
// end-to-end script against the installed binary.
Outcome cli_contract() {
  Outcome o;
  auto run = [](std::vector<std::string> args, std::string& out) {
    args.insert(args.begin(), "akivis");
    std::ostringstream os, es;
    const int code = cli::run(args, os, es);
    out = os.str();
    return code;
  };
  const std::string data = AKIVIS_DATA_DIR;
  for (const auto& entry : example_catalog()) {
    std::ifstream in(data + "/examples/" + entry.name + ".alg", std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    const AlgebraDocument doc = parse_algebra(golden.str());
    o.require(emit_algebra(doc) == golden.str(), entry.name + " emit(parse) differs");
    o.require(as_akivis(doc.algebra) == as_akivis(entry.build()), entry.name + " parse differs");
    std::string first, second;
    run({"example", "emit", entry.name}, first);
    run({"example", "emit", entry.name}, second);
    o.require(first == golden.str() && first == second, entry.name + " emit not stable");
  }
  const std::string cmd = std::string("bash '") + AKIVIS_E2E_SCRIPT + "' '" + AKIVIS_CLI_PATH +
                          "' '" + data + "' > akivis_e2e.log 2>&1";
  const int rc = std::system(cmd.c_str());
  o.require(rc == 0, "end-to-end script failed (see akivis_e2e.log)");
  o.detail = "golden round trips for " + std::to_string(example_catalog().size()) +
             " examples; end-to-end script " + (rc == 0 ? "passed" : "failed") +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"O^A table reproduction", octonion_table},
      {"Mat~1,1 table reproduction", mat11_table},
      {"witness inequalities", witness_inequalities},
      {"Akivis-identity suite and mutation testing", akivis_suite},
      {"embedding relations", embedding},
      {"PBW dimensions", dimensions},
      {"leading-term property", leading_term},
      {"iota injectivity", injectivity},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": "
              << criteria[i].first << " (" << out.detail << ") [" << t.str() << "s]" << std::endl;
    if (!out.ok) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all 9 criteria passed"
                            : "acceptance: " + std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
