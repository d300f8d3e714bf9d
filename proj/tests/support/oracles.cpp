#include "oracles.hpp"

#include <cctype>
#include <stdexcept>

namespace oracles {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}

}  // namespace

Vector parse_cell(const BasisPtr& basis, const std::string& text) {
  Vector out(basis);
  std::string body = trim(text);
  if (body == "0") return out;
  // split on '+' outside of coefficients; terms may carry a leading '-'
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : body) {
    if (ch == '+') {
      terms.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(trim(cur));
  for (const auto& term : terms) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < term.size() && term[pos] == '-') {
      negative = true;
      ++pos;
    }
    while (pos < term.size() && term[pos] == ' ') ++pos;
    std::size_t start = pos;
    while (pos < term.size() && (std::isdigit(static_cast<unsigned char>(term[pos])) ||
                                 term[pos] == '/'))
      ++pos;
    Scalar coeff = start == pos ? Scalar(1) : Scalar::parse(term.substr(start, pos - start));
    while (pos < term.size() && term[pos] == ' ') ++pos;
    std::string symbol = term.substr(pos);
    if (symbol.empty()) symbol = "e0";  // the unit 1 in the printed table
    if (negative) coeff = -coeff;
    out.add_term(basis->index_of(symbol), coeff);
  }
  return out;
}

const std::vector<std::vector<std::string>>& printed_octonion_table() {
  // columns: 1, e1, ..., e7; a bare "-2" is -2 * 1
  static const std::vector<std::vector<std::string>> table = {
      {"0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "-2e3", "2e2", "-2e5", "2e4", "2e7", "-2e6"},
      {"0", "2e3", "0", "-2e1", "-2e6", "-2e7", "2e4", "2e5"},
      {"0", "-2e2", "2e1", "0", "-2e7", "2e6", "-2e5", "2e4"},
      {"0", "2e5", "2e6", "2e7", "-2", "0", "0", "0"},
      {"0", "-2e4", "2e7", "-2e6", "0", "-2", "0", "0"},
      {"0", "-2e7", "-2e4", "2e5", "0", "0", "-2", "0"},
      {"0", "2e6", "-2e5", "-2e4", "0", "0", "0", "-2"},
  };
  return table;
}

const std::vector<std::vector<std::string>>& printed_mat11_table() {
  static const std::vector<std::vector<std::string>> table = {
      {"0", "0", "x", "-y"},
      {"0", "0", "2x", "-2y"},
      {"-x", "-2x", "0", "b"},
      {"y", "2y", "b", "0"},
  };
  return table;
}

Matrix block_product(const Matrix& x, const Matrix& y, std::size_t n, bool twisted) {
  const std::size_t s = x.size;
  Matrix out(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t l = 0; l < s; ++l) {
      Scalar acc;
      for (std::size_t j = 0; j < s; ++j) {
        Scalar term = x.at(i, j) * y.at(j, l);
        // w1 v2 contributes to the bottom-right block: i, l >= n and j < n
        if (twisted && i >= n && l >= n && j < n) term = -term;
        acc += term;
      }
      out.at(i, l) = acc;
    }
  return out;
}

namespace {

void words(const akivis::GradedBasis& basis, int n, std::vector<std::size_t>& cur,
           std::set<std::vector<std::size_t>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    for (std::size_t t = 1; t < cur.size(); ++t) {
      if (cur[t - 1] > cur[t]) return;
      if (cur[t - 1] == cur[t] && basis.parity(cur[t]) == Parity::odd) return;
    }
    out.insert(cur);
    return;
  }
  for (std::size_t g = 0; g < basis.size(); ++g) {
    cur.push_back(g);
    words(basis, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::string> enumerate_pbw(const akivis::GradedBasis& basis, int n) {
  std::vector<std::string> out;
  if (n == 0) return {"1"};
  if (n <= 3) {
    std::set<std::vector<std::size_t>> found;
    std::vector<std::size_t> cur;
    words(basis, n, cur, found);
    for (const auto& w : found) {
      std::string s;
      for (auto g : w) s += basis.name(g);
      out.push_back(s);
    }
    return out;
  }
  for (int i = 1; i < n; ++i) {
    const auto left = enumerate_pbw(basis, i);
    const auto right = enumerate_pbw(basis, n - i);
    for (const auto& l : left)
      for (const auto& r : right) out.push_back("(" + l + " . " + r + ")");
  }
  return out;
}

Scalar random_scalar(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  for (;;) {
    Scalar s(num(rng), den(rng));
    if (!nonzero || !s.is_zero()) return s;
  }
}

Vector random_homogeneous(std::mt19937_64& rng, const BasisPtr& basis, Parity p,
                          double density) {
  std::bernoulli_distribution keep(density);
  Vector v(basis);
  for (std::size_t g = 0; g < basis->size(); ++g)
    if (basis->parity(g) == p && keep(rng)) v.add_term(g, random_scalar(rng));
  return v;
}

Vector random_vector(std::mt19937_64& rng, const BasisPtr& basis, double density) {
  std::bernoulli_distribution keep(density);
  Vector v(basis);
  for (std::size_t g = 0; g < basis->size(); ++g)
    if (keep(rng)) v.add_term(g, random_scalar(rng));
  return v;
}

akivis::SuperTable random_table(std::mt19937_64& rng, std::size_t p, std::size_t q,
                                double density) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < p; ++i) even.push_back("u" + std::to_string(i + 1));
  for (std::size_t i = 0; i < q; ++i) odd.push_back("w" + std::to_string(i + 1));
  auto basis = akivis::GradedBasis::make(even, odd);
  std::map<akivis::PairKey, Vector> product;
  for (std::size_t i = 0; i < basis->size(); ++i)
    for (std::size_t j = 0; j < basis->size(); ++j) {
      Vector v = random_homogeneous(rng, basis, basis->parity(i) + basis->parity(j), density);
      if (!v.is_zero()) product.emplace(akivis::PairKey{i, j}, std::move(v));
    }
  return akivis::SuperTable(basis, product);
}

std::vector<NamedSpec> catalog_specs() {
  std::vector<NamedSpec> out;
  for (const auto& entry : akivis::example_catalog())
    out.push_back({entry.name, std::make_shared<const akivis::AkivisSpec>(
                                   akivis::as_akivis(entry.build()))});
  return out;
}

bool has_repeated_even(const akivis::GradedBasis& basis, std::size_t i, std::size_t j,
                       std::size_t k) {
  auto even = [&](std::size_t g) { return basis.parity(g) == Parity::even; };
  return (i == j && even(i)) || (j == k && even(j)) || (i == k && even(i));
}

}  // namespace oracles
