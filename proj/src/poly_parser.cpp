#include "dihedral/poly_parser.hpp"

#include <cctype>

namespace dihedral {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at offset " + std::to_string(position) + ": " + message), position_(position) {}

std::vector<int> ParsedPoly::used_variables() const {
  std::vector<int> out;
  for (int v = 0; v < 8; ++v)
    for (const auto& [e, c] : terms)
      if (e[static_cast<std::size_t>(v)] > 0) {
        out.push_back(v);
        break;
      }
  return out;
}

namespace {

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  int variable() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < ParsedPoly::kNames.size(); ++i)
      if (name == ParsedPoly::kNames[i]) return static_cast<int>(i);
    throw ParseError(start, name.empty() ? "expected a variable" : "unknown variable '" + name + "'");
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

void parse_factor(Lexer& lx, ParsedPoly::Exponent& e) {
  const int v = lx.variable();
  int k = 1;
  if (lx.accept('^')) {
    const std::size_t at = lx.pos();
    mpz_class n = lx.integer();
    if (n > 10000) throw ParseError(at, "exponent too large");
    k = static_cast<int>(n.get_si());
  }
  e[static_cast<std::size_t>(v)] += k;
}

}  // namespace

ParsedPoly parse_polynomial(const std::string& text) {
  Lexer lx(text);
  ParsedPoly out;
  if (lx.done()) throw ParseError(0, "empty polynomial");
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      negative = true;
    } else if (!first) {
      throw ParseError(lx.pos(), "expected '+' or '-'");
    }
    first = false;
    mpq_class coeff(1);
    ParsedPoly::Exponent e{};
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      mpz_class num = lx.integer();
      mpz_class den(1);
      if (lx.accept('/')) {
        const std::size_t at = lx.pos();
        den = lx.integer();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_coeff = true;
      if (!lx.accept('*')) {
        if (!lx.done() && lx.peek() != '+' && lx.peek() != '-')
          throw ParseError(lx.pos(), "expected '*' after coefficient");
        if (negative) coeff = -coeff;
        out.terms[e] += coeff;
        continue;
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(lx.peek())))
      throw ParseError(lx.pos(), have_coeff ? "expected a variable after '*'" : "expected a term");
    parse_factor(lx, e);
    while (lx.accept('*')) parse_factor(lx, e);
    if (negative) coeff = -coeff;
    out.terms[e] += coeff;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (sgn(it->second) == 0)
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

namespace {

void require_only(const ParsedPoly& p, const std::vector<int>& allowed, const std::string& what) {
  for (int v : p.used_variables()) {
    bool ok = false;
    for (int a : allowed) ok = ok || a == v;
    if (!ok)
      throw ParseError(0, std::string("variable '") + ParsedPoly::kNames[static_cast<std::size_t>(v)] +
                              "' is not allowed in " + what);
  }
}

int variable_index(const std::string& name) {
  for (std::size_t i = 0; i < ParsedPoly::kNames.size(); ++i)
    if (name == ParsedPoly::kNames[i]) return static_cast<int>(i);
  throw DomainError("unknown variable name " + name);
}

}  // namespace

UPoly parse_upoly(const std::string& text, Field f, const std::string& var) {
  const ParsedPoly p = parse_polynomial(text);
  const int v = variable_index(var);
  require_only(p, {v}, "a polynomial in " + var);
  UPoly out(f);
  for (const auto& [e, c] : p.terms) out += UPoly::monomial(Scalar(f, c), e[static_cast<std::size_t>(v)]);
  return out;
}

HPoly parse_hpoly(const std::string& text, Field f, int nvars) {
  if (nvars < 2 || nvars > 3) throw DomainError("forms use two or three variables");
  const ParsedPoly p = parse_polynomial(text);
  std::vector<int> allowed;
  for (int i = 0; i < nvars; ++i) allowed.push_back(1 + i);
  require_only(p, allowed, nvars == 2 ? "a binary form (x0, x1)" : "a ternary form (x0, x1, x2)");
  if (p.terms.empty()) throw ParseError(0, "the zero form needs an explicit degree");
  int degree = -1;
  HPoly out(f, nvars, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    HPoly::Exponent ex;
    int d = 0;
    for (int i = 0; i < nvars; ++i) {
      ex.push_back(e[static_cast<std::size_t>(1 + i)]);
      d += ex.back();
    }
    if (first) {
      degree = d;
      out = HPoly(f, nvars, degree);
      first = false;
    } else if (d != degree) {
      throw ParseError(0, "polynomial is not homogeneous");
    }
    out.add_term(ex, Scalar(f, c));
  }
  return out;
}

HPoly parse_hpoly(const std::string& text, Field f, int nvars, int degree) {
  const ParsedPoly p = parse_polynomial(text);
  if (p.terms.empty()) return HPoly(f, nvars, degree);
  HPoly h = parse_hpoly(text, f, nvars);
  if (h.is_zero()) return HPoly(f, nvars, degree);
  if (h.degree() != degree)
    throw ParseError(0, "expected degree " + std::to_string(degree) + ", found " + std::to_string(h.degree()));
  return h;
}

BinaryForm parse_binary_form(const std::string& text, Field f, int degree) {
  const ParsedPoly p = parse_polynomial(text);
  if (p.terms.empty() || degree < 0) {
    require_only(p, {1, 2}, "a binary form (x0, x1)");
    bool all_zero = true;
    for (const auto& [e, c] : p.terms) all_zero = all_zero && sgn(c) == 0;
    if (!all_zero) throw ParseError(0, "nonzero form of negative degree");
    return BinaryForm(f, degree);
  }
  return parse_hpoly(text, f, 2, degree).to_binary();
}

BinaryForm parse_binary_form(const std::string& text, Field f) { return parse_hpoly(text, f, 2).to_binary(); }

}  // namespace dihedral
