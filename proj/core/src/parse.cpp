#include "ideals/parse.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>

#include "ideals/errors.hpp"

namespace ideals {

namespace {

struct RawTerm {
  Rational coeff{1};
  std::map<int, std::int64_t> exps;  // variable index (1-based) -> exponent
};

struct RawGenerator {
  std::vector<RawTerm> terms;
  bool monomial_text = false;  // single coefficient-free product (or "1")
};

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    return s_[pos_++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  std::string natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", start);
    return std::string(s_.substr(start, pos_ - start));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::int64_t to_int64(const std::string& digits, std::size_t at) {
  try {
    return std::stoll(digits);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range", at);
  }
}

// variable := x|y|z | x<digits>; returns the 1-based index
int parse_variable(Cursor& c) {
  std::size_t at = c.pos();
  char v = c.take();
  if (v == 'y') return 2;
  if (v == 'z') return 3;
  if (v != 'x') throw ParseError("expected a variable", at);
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    std::size_t numpos = c.pos();
    std::int64_t idx = to_int64(c.natural(), numpos);
    if (idx < 1) throw ParseError("variable index must be >= 1", numpos);
    return static_cast<int>(idx);
  }
  return 1;
}

// element := coefficient | variable ("^" natural)?
// Returns false when the element is a coefficient (stored into term.coeff).
bool parse_element(Cursor& c, RawTerm& term, bool& saw_coefficient) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    Int num(c.natural());
    Int den(1);
    if (c.accept('/')) {
      std::size_t dpos = c.pos();
      den = Int(c.natural());
      if (den == 0) throw ParseError("zero denominator", dpos);
    }
    term.coeff *= Rational(num, den);
    saw_coefficient = saw_coefficient || !(num == 1 && den == 1);
    return false;
  }
  int var = parse_variable(c);
  std::int64_t exp = 1;
  if (c.accept('^')) {
    std::size_t at = c.pos();
    exp = to_int64(c.natural(), at);
    if (exp < 0) throw ParseError("exponent must be >= 0", at);
  }
  term.exps[var] += exp;
  return true;
}

RawGenerator parse_generator(Cursor& c) {
  RawGenerator gen;
  bool saw_sign = false;
  bool saw_nontrivial_coefficient = false;
  bool first = true;
  while (true) {
    Rational sign(1);
    if (c.accept('+')) {
      saw_sign = true;
    } else if (c.accept('-')) {
      sign = -1;
      saw_sign = true;
    } else if (!first) {
      break;
    }
    if (c.eof()) throw ParseError("dangling sign", c.pos());

    RawTerm term;
    bool more = true;
    while (more) {
      parse_element(c, term, saw_nontrivial_coefficient);
      more = c.accept('*');
      if (more && c.eof()) throw ParseError("dangling '*'", c.pos());
    }
    term.coeff *= sign;
    // literal zero terms vanish ("0" parses as the zero polynomial)
    if (term.coeff != 0) gen.terms.push_back(std::move(term));

    first = false;
    char next = c.peek();
    if (next != '+' && next != '-') break;
  }

  // Monomial text: a single bare product of variable powers, or the literal
  // "1", or the literal "0"; no signs, no coefficients.
  gen.monomial_text =
      !saw_sign && !saw_nontrivial_coefficient && gen.terms.size() <= 1;
  return gen;
}

std::vector<RawGenerator> parse_generators(std::string_view text) {
  Cursor c(text);
  if (c.eof()) throw ParseError("empty ideal text", 0);
  std::vector<RawGenerator> gens;
  while (true) {
    gens.push_back(parse_generator(c));
    if (c.eof()) break;
    std::size_t at = c.pos();
    if (!c.accept(',')) throw ParseError("expected ','", at);
    if (c.eof()) throw ParseError("trailing ','", at);
  }
  return gens;
}

int infer_dimension(const std::vector<RawGenerator>& gens, int min_dim,
                    std::string_view text) {
  int dim = min_dim;
  for (const RawGenerator& g : gens)
    for (const RawTerm& t : g.terms)
      for (const auto& [var, exp] : t.exps) dim = std::max(dim, var);
  if (dim < 1)
    throw ParseError(
        "cannot infer ambient dimension: no variables in '" + std::string(text) + "'",
        0);
  return dim;
}

Exponent to_exponent(const RawTerm& term, int dim) {
  std::vector<std::int64_t> coords(static_cast<std::size_t>(dim), 0);
  for (const auto& [var, exp] : term.exps)
    coords[static_cast<std::size_t>(var - 1)] += exp;
  return Exponent(std::move(coords));
}

}  // namespace

ParsedIdeal parse_ideal(std::string_view text, int min_dim) {
  std::vector<RawGenerator> gens = parse_generators(text);
  int dim = infer_dimension(gens, min_dim, text);

  bool monomial = std::all_of(gens.begin(), gens.end(),
                              [](const RawGenerator& g) { return g.monomial_text; });
  if (monomial) {
    std::vector<Exponent> exps;
    for (const RawGenerator& g : gens)
      if (!g.terms.empty()) exps.push_back(to_exponent(g.terms[0], dim));
    return MonomialIdeal::minimalize(dim, std::move(exps));
  }

  std::vector<Polynomial> polys;
  for (const RawGenerator& g : gens) {
    Polynomial::TermMap terms;
    for (const RawTerm& t : g.terms) {
      Exponent e = to_exponent(t, dim);
      auto [it, inserted] = terms.emplace(e, t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    polys.push_back(Polynomial::from_terms(dim, std::move(terms)));
  }
  return PolynomialIdeal(dim, std::move(polys));
}

MonomialIdeal parse_monomial_ideal(std::string_view text, int min_dim) {
  ParsedIdeal p = parse_ideal(text, min_dim);
  if (const MonomialIdeal* m = std::get_if<MonomialIdeal>(&p)) return *m;
  throw ParseError("expected monomial ideal text: '" + std::string(text) + "'", 0);
}

PolynomialIdeal parse_polynomial_ideal(std::string_view text, int min_dim) {
  ParsedIdeal p = parse_ideal(text, min_dim);
  if (PolynomialIdeal* poly = std::get_if<PolynomialIdeal>(&p)) return std::move(*poly);
  const MonomialIdeal& m = std::get<MonomialIdeal>(p);
  std::vector<Polynomial> polys;
  for (const Exponent& g : m.generators()) polys.push_back(Polynomial::monomial(g));
  return PolynomialIdeal(m.dim(), std::move(polys));
}

std::vector<MonomialIdeal> parse_ideal_table(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char ch) {
      return std::isspace(ch);
    });
    if (!blank) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty ideal table", 0);

  int dim = 0;
  for (const std::string& l : lines) {
    MonomialIdeal a = parse_monomial_ideal(l, 1);
    dim = std::max(dim, a.dim());
  }
  std::vector<MonomialIdeal> table;
  table.reserve(lines.size());
  for (const std::string& l : lines) table.push_back(parse_monomial_ideal(l, dim));
  return table;
}

std::string to_string(const Exponent& monomial) {
  std::string out;
  for (int i = 0; i < monomial.dim(); ++i) {
    if (monomial[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (monomial[i] != 1) out += "^" + std::to_string(monomial[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const Exponent& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  // descending lexicographic term order for a stable rendering
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    bool has_vars = e.total_degree() > 0;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (!has_vars) {
      out += ideals::to_string(abs);
    } else if (abs == 1) {
      out += to_string(e);
    } else {
      out += ideals::to_string(abs) + "*" + to_string(e);
    }
  }
  return out;
}

std::string to_string(const PolynomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const Polynomial& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

}  // namespace ideals
