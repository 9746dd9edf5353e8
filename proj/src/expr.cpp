#include "theta/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace theta {

std::string monomial_str(const Presentation& P, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int l = 0; l < P.size(); ++l)
    for (int k = 0; k < m.e[l]; ++k) {
      if (!first) os << "*";
      os << P.letters[l].name;
      first = false;
    }
  return os.str();
}

namespace {

// coefficient decoration in front of a monomial / tensor body
std::string decorated(const PhaseCoefficient& c, const std::string& body, bool body_is_unit) {
  if (body_is_unit) {
    if (c.is_single_term() || c.is_zero()) return c.str();
    return "(" + c.str() + ")";
  }
  if (c.is_one()) return body;
  if ((-c).is_one()) return "-" + body;
  if (c.is_single_term()) return c.str() + " * " + body;
  return "(" + c.str() + ") * " + body;
}

std::string join_terms(std::vector<std::string> pieces) {
  if (pieces.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      os << pieces[i];
    } else if (!pieces[i].empty() && pieces[i][0] == '-') {
      os << " - " << pieces[i].substr(1);
    } else {
      os << " + " << pieces[i];
    }
  }
  return os.str();
}

} // namespace

std::string poly_str(const Poly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::string> pieces;
  const auto& t = f.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    pieces.push_back(
        decorated(it->second, monomial_str(f.pres(), it->first), it->first.is_unit()));
  return join_terms(std::move(pieces));
}

std::string tensor_str(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::vector<std::string> pieces;
  const auto& terms = t.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::ostringstream body;
    bool all_unit = true;
    for (int i = 0; i < t.arity(); ++i) {
      if (i) body << " @ ";
      body << monomial_str(t.leg(i), it->first[i]);
      all_unit = all_unit && it->first[i].is_unit();
    }
    pieces.push_back(decorated(it->second, body.str(), false));
    (void)all_unit;
  }
  return join_terms(std::move(pieces));
}

namespace {

struct Token {
  enum Kind { num, ident, op, end } kind = end;
  std::string text;
  size_t pos = 0;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& str) : s(str) {}

  Token next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) return {Token::end, "", i};
    const size_t start = i;
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return {Token::num, s.substr(start, i - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      while (i < s.size() && s[i] == '\'') ++i;  // trailing primes are part of the name
      return {Token::ident, s.substr(start, i - start), start};
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      ++i;
      return {Token::op, std::string(1, c), start};
    }
    throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                "' at position " + std::to_string(start));
  }
};

struct Parser {
  const Presentation& P;
  Lexer lex;
  Token cur;

  Parser(const Presentation& p, const std::string& text) : P(p), lex(text) { cur = lex.next(); }

  void advance() { cur = lex.next(); }
  bool at_op(const char* o) const { return cur.kind == Token::op && cur.text == o; }
  void expect_op(const char* o) {
    if (!at_op(o))
      throw std::invalid_argument(std::string("expected '") + o + "' at position " +
                                  std::to_string(cur.pos));
    advance();
  }

  long parse_int() {
    bool neg = false;
    if (at_op("-")) {
      neg = true;
      advance();
    }
    if (cur.kind != Token::num)
      throw std::invalid_argument("expected integer at position " + std::to_string(cur.pos));
    long v = std::stol(cur.text);
    advance();
    return neg ? -v : v;
  }

  Poly parse_factor() {
    if (at_op("-")) {
      advance();
      return -parse_factor();
    }
    if (at_op("(")) {
      advance();
      Poly f = parse_expr();
      expect_op(")");
      return f;
    }
    if (cur.kind == Token::num) {
      Rational num(cur.text);
      advance();
      if (at_op("/")) {
        advance();
        if (cur.kind != Token::num)
          throw std::invalid_argument("expected denominator at position " +
                                      std::to_string(cur.pos));
        num /= Rational(cur.text);
        advance();
      }
      return PhaseCoefficient(num) * Poly::one(P);
    }
    if (cur.kind == Token::ident) {
      const std::string name = cur.text;
      advance();
      if (name == "mu") {
        long k = 1;
        if (at_op("^")) {
          advance();
          k = parse_int();
        }
        return PhaseCoefficient::mu(k) * Poly::one(P);
      }
      if (name == "mubar") return PhaseCoefficient::mu(-1) * Poly::one(P);
      if (name == "lambda") return PhaseCoefficient::mu(2) * Poly::one(P);
      if (name == "lambdabar") return PhaseCoefficient::mu(-2) * Poly::one(P);
      const int idx = P.index_of(name);
      if (idx < 0)
        throw std::invalid_argument("unknown letter '" + name + "' in algebra " + P.name);
      return Poly::letter(P, idx);
    }
    throw std::invalid_argument("unexpected token at position " + std::to_string(cur.pos));
  }

  Poly parse_term() {
    Poly f = parse_factor();
    while (at_op("*")) {
      advance();
      f *= parse_factor();
    }
    return f;
  }

  Poly parse_expr() {
    Poly f = parse_term();
    while (at_op("+") || at_op("-")) {
      const bool plus = at_op("+");
      advance();
      Poly g = parse_term();
      f = plus ? f + g : f - g;
    }
    return f;
  }
};

} // namespace

Poly parse_poly(const Presentation& P, const std::string& text) {
  Parser parser(P, text);
  Poly f = parser.parse_expr();
  if (parser.cur.kind != Token::end)
    throw std::invalid_argument("trailing input at position " +
                                std::to_string(parser.cur.pos));
  return f;
}

std::string truncated(const std::string& s, size_t limit) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + " ...";
}

} // namespace theta
