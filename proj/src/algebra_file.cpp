#include "akivis/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "akivis/errors.hpp"

namespace akivis {

namespace {

struct Token {
  enum Kind { ident, number, plus, minus, equals } kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = offset + i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < line.size() && digit(line[j])) ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        if (j >= line.size() || !digit(line[j]))
          throw ParseError(line_no, offset + j + 1, "malformed rational literal");
        while (j < line.size() && digit(line[j])) ++j;
      }
      if (j < line.size() && (line[j] == '.' || ident_char(line[j])))
        throw ParseError(line_no, offset + j + 1,
                         "malformed rational literal (only integers and p/q are accepted)");
      out.push_back({Token::number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '+') {
      out.push_back({Token::plus, "+", col});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::minus, "-", col});
      ++i;
    } else if (c == '=') {
      out.push_back({Token::equals, "=", col});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

struct RawEntry {
  std::vector<std::size_t> lhs;
  Vector rhs;
  std::size_t line;
};

Vector parse_rhs(const std::vector<Token>& toks, std::size_t pos, const BasisPtr& basis,
                 std::size_t line_no, std::size_t line_len) {
  Vector out(basis);
  if (pos < toks.size() && toks[pos].kind == Token::number && toks[pos].text == "0" &&
      pos + 1 == toks.size())
    return out;
  bool first = true;
  while (pos < toks.size()) {
    int sign = 1;
    bool saw_sign = false;
    while (pos < toks.size() && (toks[pos].kind == Token::plus || toks[pos].kind == Token::minus)) {
      if (toks[pos].kind == Token::minus) sign = -sign;
      saw_sign = true;
      ++pos;
    }
    if (!first && !saw_sign)
      throw ParseError(line_no, toks[pos].column, "expected '+' or '-' between terms");
    Scalar coeff(sign);
    if (pos < toks.size() && toks[pos].kind == Token::number) {
      try {
        coeff *= Scalar::parse(toks[pos].text);
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, toks[pos].column, e.what());
      }
      ++pos;
    }
    if (pos >= toks.size()) throw ParseError(line_no, line_len + 1, "expected a generator");
    if (toks[pos].kind != Token::ident)
      throw ParseError(line_no, toks[pos].column, "expected a generator, got '" + toks[pos].text + "'");
    auto idx = basis->find(toks[pos].text);
    if (!idx)
      throw ParseError(line_no, toks[pos].column, "unknown generator '" + toks[pos].text + "'");
    out.add_term(*idx, coeff);
    ++pos;
    first = false;
  }
  if (first) throw ParseError(line_no, line_len + 1, "empty right-hand side (write 0)");
  return out;
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) {
  std::optional<std::string> name, kind, unit;
  std::optional<std::vector<std::string>> even, odd;
  std::size_t unit_line = 0;
  BasisPtr basis;
  std::vector<RawEntry> entries;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size()) continue;

    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      std::string key(line.substr(first, colon - first));
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
      const std::string_view value = line.substr(colon + 1);
      if (basis) throw ParseError(line_no, first + 1, "header line after table entries");
      auto once = [&](auto& slot, auto v) {
        if (slot) throw ParseError(line_no, first + 1, "duplicate header '" + key + "'");
        slot = std::move(v);
      };
      const auto words = split_words(value);
      if (key == "name") {
        std::string v(value);
        const auto b = v.find_first_not_of(" \t");
        const auto e = v.find_last_not_of(" \t");
        once(name, b == std::string::npos ? std::string() : v.substr(b, e - b + 1));
      } else if (key == "kind") {
        if (words.size() != 1 || (words[0] != "product-table" && words[0] != "akivis-spec"))
          throw ParseError(line_no, colon + 2, "kind must be product-table or akivis-spec");
        once(kind, words[0]);
      } else if (key == "even") {
        once(even, words);
      } else if (key == "odd") {
        once(odd, words);
      } else if (key == "unit") {
        if (words.size() != 1) throw ParseError(line_no, colon + 2, "unit takes one generator");
        once(unit, words[0]);
        unit_line = line_no;
      } else {
        throw ParseError(line_no, first + 1, "unknown header '" + key + "'");
      }
      for (const auto& w : words)
        if ((key == "even" || key == "odd") &&
            (!ident_start(w[0]) || w.find_first_not_of(
                                       "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
                                       "0123456789_") != std::string::npos))
          throw ParseError(line_no, colon + 2, "invalid generator symbol '" + w + "'");
      continue;
    }

    if (!basis) {
      if (!name) throw ParseError(line_no, 1, "missing 'name:' header");
      if (!kind) throw ParseError(line_no, 1, "missing 'kind:' header");
      if (!even || !odd) throw ParseError(line_no, 1, "missing 'even:' or 'odd:' header");
      try {
        basis = GradedBasis::make(*even, *odd);
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, 1, e.what());
      }
    }
    const auto toks = tokenize(line, line_no, 0);
    std::size_t pos = 0;
    std::vector<std::size_t> lhs;
    while (pos < toks.size() && toks[pos].kind == Token::ident) {
      auto idx = basis->find(toks[pos].text);
      if (!idx)
        throw ParseError(line_no, toks[pos].column, "unknown generator '" + toks[pos].text + "'");
      lhs.push_back(*idx);
      ++pos;
    }
    if (pos >= toks.size() || toks[pos].kind != Token::equals)
      throw ParseError(line_no, pos < toks.size() ? toks[pos].column : line.size() + 1,
                       "expected '=' after the entry's generators");
    const std::size_t arity_limit = *kind == "akivis-spec" ? 3 : 2;
    if (lhs.size() < 2 || lhs.size() > arity_limit)
      throw ParseError(line_no, first + 1,
                       *kind == "akivis-spec"
                           ? "akivis-spec entries take two (bracket) or three (ternary) generators"
                           : "product-table entries take two generators");
    for (const auto& e : entries)
      if (e.lhs == lhs)
        throw ParseError(line_no, first + 1,
                         "duplicate entry (first given on line " + std::to_string(e.line) + ")");
    Vector rhs = parse_rhs(toks, pos + 1, basis, line_no, line.size());
    entries.push_back({std::move(lhs), std::move(rhs), line_no});
  }

  if (!name) throw ParseError(line_no, 1, "missing 'name:' header");
  if (!kind) throw ParseError(line_no, 1, "missing 'kind:' header");
  if (!even || !odd) throw ParseError(line_no, 1, "missing 'even:' or 'odd:' header");
  if (!basis) {
    try {
      basis = GradedBasis::make(*even, *odd);
    } catch (const InvalidInput& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }

  if (*kind == "product-table") {
    std::map<PairKey, Vector> product;
    for (auto& e : entries) product.emplace(PairKey{e.lhs[0], e.lhs[1]}, std::move(e.rhs));
    std::optional<std::size_t> unit_index;
    if (unit) {
      unit_index = basis->find(*unit);
      if (!unit_index) throw ParseError(unit_line, 1, "unknown unit generator '" + *unit + "'");
    }
    return {*name, Algebra(SuperTable(basis, product, unit_index))};
  }
  if (unit) throw ParseError(unit_line, 1, "akivis-spec files have no unit");
  std::map<PairKey, Vector> bracket;
  std::map<TripleKey, Vector> ternary;
  for (auto& e : entries) {
    if (e.lhs.size() == 2)
      bracket.emplace(PairKey{e.lhs[0], e.lhs[1]}, std::move(e.rhs));
    else
      ternary.emplace(TripleKey{e.lhs[0], e.lhs[1], e.lhs[2]}, std::move(e.rhs));
  }
  return {*name, Algebra(AkivisSpec(basis, bracket, ternary))};
}

AlgebraDocument load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

namespace {

void emit_list(std::ostringstream& os, const char* key, const GradedBasis& b, bool odd) {
  os << key << ":";
  for (std::size_t i = 0; i < b.size(); ++i)
    if ((b.parity(i) == Parity::odd) == odd) os << ' ' << b.name(i);
  os << '\n';
}

}  // namespace

std::string emit_algebra(const AlgebraDocument& doc) {
  std::ostringstream os;
  const bool is_table = std::holds_alternative<SuperTable>(doc.algebra);
  const BasisPtr& basis = is_table ? std::get<SuperTable>(doc.algebra).basis()
                                   : std::get<AkivisSpec>(doc.algebra).basis();
  const GradedBasis& b = *basis;
  os << "name: " << doc.name << '\n';
  os << "kind: " << (is_table ? "product-table" : "akivis-spec") << '\n';
  emit_list(os, "even", b, false);
  emit_list(os, "odd", b, true);
  const std::size_t n = b.size();
  if (is_table) {
    const auto& t = std::get<SuperTable>(doc.algebra);
    if (t.unit()) os << "unit: " << b.name(*t.unit()) << '\n';
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!t.product(i, j).is_zero())
          os << b.name(i) << ' ' << b.name(j) << " = " << t.product(i, j).to_string() << '\n';
  } else {
    const auto& s = std::get<AkivisSpec>(doc.algebra);
    for (const auto& [key, v] : s.bracket_entries())
      os << b.name(key.first) << ' ' << b.name(key.second) << " = " << v.to_string() << '\n';
    for (const auto& [key, v] : s.ternary_entries())
      os << b.name(std::get<0>(key)) << ' ' << b.name(std::get<1>(key)) << ' '
         << b.name(std::get<2>(key)) << " = " << v.to_string() << '\n';
  }
  return os.str();
}

}  // namespace akivis
