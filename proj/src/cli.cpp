#include "akivis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "akivis/algebra_file.hpp"
#include "akivis/catalog.hpp"
#include "akivis/envelope.hpp"
#include "akivis/errors.hpp"
#include "akivis/expr.hpp"
#include "akivis/identities.hpp"
#include "akivis/report_json.hpp"

namespace akivis::cli {

namespace {

struct Loaded {
  std::string name;
  std::optional<SuperTable> table;
  SpecPtr spec;
};

Loaded load(const std::string& path) {
  AlgebraDocument doc = load_algebra(path);
  Loaded l;
  l.name = doc.name;
  if (auto* t = std::get_if<SuperTable>(&doc.algebra)) l.table = *t;
  l.spec = std::make_shared<const AkivisSpec>(as_akivis(doc.algebra));
  return l;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << content;
  if (!f) throw InvalidInput("failed writing '" + path + "'");
}

TruncationPolicy policy_with(std::optional<int> max_degree) {
  TruncationPolicy p = TruncationPolicy::from_environment();
  if (max_degree) {
    if (*max_degree < 1) throw InvalidInput("--max-degree must be positive");
    p.max_degree = *max_degree;
  }
  return p;
}

// Deterministic sample vectors with small rational coefficients.
std::vector<Vector> sample_vectors(const BasisPtr& basis, std::size_t count) {
  std::mt19937 rng(20240917u);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Vector> out;
  for (std::size_t c = 0; c < count; ++c) {
    Vector v(basis);
    for (std::size_t i = 0; i < basis->size(); ++i) v.add_term(i, Scalar(num(rng), den(rng)));
    out.push_back(std::move(v));
  }
  return out;
}

CheckReport iota_report(const Envelope& env) {
  CheckReport r;
  r.identity = "iota-roundtrip";
  const BasisPtr& basis = env.akivis().basis();
  std::vector<Vector> probes;
  probes.emplace_back(basis);
  for (std::size_t i = 0; i < basis->size(); ++i) probes.push_back(Vector::unit(basis, i));
  for (auto& v : sample_vectors(basis, 100)) probes.push_back(std::move(v));
  for (const auto& v : probes) {
    ++r.checked;
    Vector back = iota_roundtrip(env, v);
    if (back != v) r.record({v.to_string()}, "", back, v);
  }
  return r;
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& command,
                 const std::string& algebra, const std::string& report_path, std::ostream& out) {
  bool pass = true;
  for (const auto& r : reports) {
    out << r.to_text();
    pass = pass && r.passed();
  }
  if (!report_path.empty()) write_file(report_path, report_json(command, algebra, reports));
  return pass ? exit_pass : exit_fail;
}

std::vector<std::string> labels(const GradedBasis& b) { return b.names(); }

}  // namespace

std::string format_table(const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels,
                         const std::vector<std::vector<std::string>>& cells,
                         const std::string& corner) {
  std::size_t label_w = corner.size();
  for (const auto& l : row_labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> widths(col_labels.size());
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    widths[j] = col_labels[j].size();
    for (const auto& row : cells) widths[j] = std::max(widths[j], row[j].size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::string out = pad(corner, label_w) + " |";
  for (std::size_t j = 0; j < col_labels.size(); ++j) out += " " + pad(col_labels[j], widths[j]);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
  std::size_t rule = label_w + 2;
  for (auto w : widths) rule += w + 1;
  out += std::string(label_w + 1, '-') + "+" + std::string(rule - label_w - 2, '-') + '\n';
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    std::string line = pad(row_labels[i], label_w) + " |";
    for (std::size_t j = 0; j < col_labels.size(); ++j) line += " " + pad(cells[i][j], widths[j]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Akivis superalgebras: identity checks and enveloping superalgebras", "akivis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "akivis 1.0.0");

  // check
  std::string check_file, identity = "akivis", report_path;
  std::size_t max_witnesses = 16;
  auto* check = app.add_subcommand("check", "Verify an identity on every basis tuple");
  check->add_option("file", check_file, "Algebra definition file")->required();
  check->add_option("--identity", identity, "Identity to check")
      ->check(CLI::IsMember({"akivis", "superanticomm", "lie", "malcev-ternary"}));
  check->add_option("--report", report_path, "Write a machine-readable report");
  check->add_option("--max-witnesses", max_witnesses, "Witness cap")->check(CLI::PositiveNumber);

  // classify
  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "Print lie / malcev-presented / "
                                                      "proper-akivis / not-akivis");
  classify_cmd->add_option("file", classify_file, "Algebra definition file")->required();

  // table
  std::string table_file, table_op = "bracket";
  auto* table = app.add_subcommand("table", "Print a multiplication table");
  table->add_option("file", table_file, "Algebra definition file")->required();
  table->add_option("--op", table_op, "Which table")
      ->check(CLI::IsMember({"bracket", "ternary", "product"}));

  // eval
  std::string eval_file, eval_expr;
  auto* eval = app.add_subcommand("eval", "Evaluate an element expression in the algebra");
  eval->add_option("file", eval_file, "Algebra definition file")->required();
  eval->add_option("--expr", eval_expr, "Expression")->required();

  // example
  auto* example = app.add_subcommand("example", "Built-in example algebras");
  example->require_subcommand(1);
  auto* example_list = example->add_subcommand("list", "List catalog entries");
  std::string example_name, example_out;
  auto* example_emit = example->add_subcommand("emit", "Write an example as an algebra file");
  example_emit->add_option("name", example_name, "Catalog or family name")->required();
  example_emit->add_option("--out", example_out, "Output path (default: standard output)");

  // envelope
  auto* envelope = app.add_subcommand("envelope", "Universal enveloping superalgebra model");
  envelope->require_subcommand(1);
  std::string env_file, env_expr, env_report;
  std::optional<int> env_max_degree;
  auto* dims = envelope->add_subcommand("dims", "Graded dimensions for degrees 0..N");
  dims->add_option("file", env_file, "Algebra definition file")->required();
  dims->add_option("--max-degree", env_max_degree, "Highest degree");
  auto* env_eval_cmd = envelope->add_subcommand("eval", "Evaluate an expression with *");
  env_eval_cmd->add_option("file", env_file, "Algebra definition file")->required();
  env_eval_cmd->add_option("--expr", env_expr, "Expression")->required();
  env_eval_cmd->add_option("--max-degree", env_max_degree, "Truncation degree");
  auto* verify = envelope->add_subcommand("verify", "Embedding, leading-term and iota checks");
  verify->add_option("file", env_file, "Algebra definition file")->required();
  verify->add_option("--max-degree", env_max_degree, "Truncation degree");
  verify->add_option("--report", env_report, "Write a machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (*check) {
      const Loaded l = load(check_file);
      const CheckOptions opts{max_witnesses};
      CheckReport r = identity == "akivis"          ? check_akivis_identity(*l.spec, opts)
                      : identity == "superanticomm" ? check_superanticommutative(*l.spec, opts)
                      : identity == "lie"           ? check_lie(*l.spec, opts)
                                                    : check_malcev_ternary(*l.spec, opts);
      return emit_reports({r}, "check", l.name, report_path, out);
    }
    if (*classify_cmd) {
      const Loaded l = load(classify_file);
      out << to_string(classify(*l.spec)) << '\n';
      return exit_pass;
    }
    if (*table) {
      const Loaded l = load(table_file);
      const GradedBasis& b = *l.spec->basis();
      const std::size_t n = b.size();
      std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
      if (table_op == "product") {
        if (!l.table) throw InvalidInput("'" + l.name + "' has no product table");
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) cells[i][j] = l.table->product(i, j).to_string();
        out << format_table(labels(b), labels(b), cells, "*");
      } else if (table_op == "bracket") {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) cells[i][j] = l.spec->bracket(i, j).to_string();
        out << format_table(labels(b), labels(b), cells, "[,]");
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) cells[j][k] = l.spec->ternary(i, j, k).to_string();
          if (i) out << '\n';
          out << format_table(labels(b), labels(b), cells, "A(" + b.name(i) + ",.,.)");
        }
      }
      return exit_pass;
    }
    if (*eval) {
      const Loaded l = load(eval_file);
      const ExprPtr e = parse_expr(eval_expr, *l.spec->basis());
      out << eval_in_algebra(*e, *l.spec, l.table ? &*l.table : nullptr).to_string() << '\n';
      return exit_pass;
    }
    if (*example) {
      if (*example_list) {
        for (const auto& e : example_catalog())
          out << e.name << "  (" << e.even_dim << "|" << e.odd_dim << ", "
              << to_string(e.expected) << ")  " << e.description << '\n';
        return exit_pass;
      }
      auto built = build_example(example_name);
      if (!built) {
        err << "unknown example '" << example_name << "' (see 'example list')\n";
        return exit_usage;
      }
      const std::string text = emit_algebra({example_name, std::move(*built)});
      if (example_out.empty())
        out << text;
      else
        write_file(example_out, text);
      return exit_pass;
    }
    if (*envelope) {
      const Loaded l = load(env_file);
      const Envelope env(l.spec, policy_with(env_max_degree));
      if (*dims) {
        for (int d = 0; d <= env.policy().max_degree; ++d)
          out << d << '\t' << env.graded_dim(d) << '\n';
        return exit_pass;
      }
      if (*env_eval_cmd) {
        const ExprPtr e = parse_expr(env_expr, env.basis());
        out << eval_in_envelope(*e, env).to_string() << '\n';
        return exit_pass;
      }
      std::vector<CheckReport> reports;
      reports.push_back(verify_embedding_relations(env));
      for (int d = 2; d <= env.policy().max_degree; ++d)
        reports.push_back(verify_leading_term(env, d));
      reports.push_back(iota_report(env));
      return emit_reports(reports, "envelope verify", l.name, env_report, out);
    }
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace akivis::cli
