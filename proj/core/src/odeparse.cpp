#include "liouv/odeparse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "liouv/errors.hpp"

namespace liouv {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), offset + start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), offset + start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", offset + i);
    }
    out.push_back({k, std::string(1, c), offset + i});
    ++i;
  }
  out.push_back({Tok::End, "", offset + s.size()});
  return out;
}

BigRational decimal_literal(const Token& t) {
  const auto dot = t.text.find('.');
  if (dot == std::string::npos) return BigRational(BigInteger(t.text));
  if (t.text.find('.', dot + 1) != std::string::npos || t.text == ".") {
    throw SyntaxError("malformed number '" + t.text + "'", t.pos);
  }
  std::string digits = t.text.substr(0, dot) + t.text.substr(dot + 1);
  BigInteger den = 1;
  for (std::size_t k = dot + 1; k < t.text.size(); ++k) den *= 10;
  return make_rational(BigInteger(digits.empty() ? "0" : digits), den);
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : toks_(tokenize(text, offset)) {}

  RationalFn parse_all() {
    RationalFn v = expr();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  RationalFn expr() {
    RationalFn v = term();
    while (true) {
      if (accept(Tok::Plus)) {
        v = v + term();
      } else if (accept(Tok::Minus)) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalFn term() {
    RationalFn v = unary();
    while (true) {
      if (accept(Tok::Star)) {
        v = v * unary();
      } else if (peek().kind == Tok::Slash) {
        const std::size_t at = next().pos;
        RationalFn d = unary();
        if (d.num().is_zero()) throw SyntaxError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalFn unary() {
    if (accept(Tok::Minus)) return -unary();
    if (accept(Tok::Plus)) return unary();
    return power();
  }

  RationalFn power() {
    RationalFn base = primary();
    if (!accept(Tok::Caret)) return base;
    return pow(base, exponent());
  }

  unsigned exponent() {
    const Token& t = peek();
    bool paren = false;
    if (t.kind == Tok::LParen) {
      paren = true;
      ++i_;
    }
    const Token& lit = peek();
    if (lit.kind != Tok::Number || lit.text.find('.') != std::string::npos) {
      throw NonPolynomialPower("exponent must be a nonnegative integer literal", lit.pos);
    }
    ++i_;
    if (lit.text.size() > 4) throw NonPolynomialPower("exponent too large", lit.pos);
    unsigned e = static_cast<unsigned>(std::stoul(lit.text));
    if (paren && !accept(Tok::RParen)) {
      throw NonPolynomialPower("exponent must be a nonnegative integer literal", peek().pos);
    }
    if (accept(Tok::Caret)) {
      unsigned inner = exponent();
      unsigned r = 1;
      for (unsigned k = 0; k < inner; ++k) r *= e;
      e = r;
    }
    return e;
  }

  RationalFn primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++i_;
        return RationalFn(Poly2(decimal_literal(t)));
      case Tok::LParen: {
        ++i_;
        RationalFn v = expr();
        if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
        return v;
      }
      case Tok::Ident:
        return identifier();
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  RationalFn identifier() {
    const Token t = next();
    const bool call = peek().kind == Tok::LParen;
    if (t.text == "x" && !call) return RationalFn(Poly2::x());
    if (t.text == "y") {
      if (!call) return RationalFn(Poly2::y());
      // y(x) stands for y.
      if (toks_[i_ + 1].kind == Tok::Ident && toks_[i_ + 1].text == "x" &&
          toks_[i_ + 2].kind == Tok::RParen) {
        i_ += 3;
        return RationalFn(Poly2::y());
      }
    }
    if (call) throw UnsupportedFunction("unsupported function '" + t.text + "'", t.pos);
    throw UnknownSymbol("unknown symbol '" + t.text +
                            "'; only x and y are allowed, instantiate parameters with numbers",
                        t.pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

RationalFn parse_at(std::string_view text, std::size_t offset) {
  return Parser(text, offset).parse_all();
}

// Integer coefficients, joint content 1, lowest term of N positive.
OdeInput normalized(std::string_view source, const RationalFn& f) {
  OdeInput o;
  o.sourceText = std::string(source);
  if (f.num().is_zero()) {
    o.M = Poly2();
    o.N = Poly2(1);
    return o;
  }
  Poly2 M = f.num();
  Poly2 N = f.den();
  BigInteger num = 0;
  BigInteger den = 1;
  for (const Poly2* p : {&M, &N}) {
    for (const auto& [m, c] : p->terms()) {
      num = gcd(num, c.get_num());
      den = lcm(den, c.get_den());
    }
  }
  BigRational scale = make_rational(den, num);
  if (std::prev(N.terms().end())->second < 0) scale = -scale;
  o.M = M * scale;
  o.N = N * scale;
  return o;
}

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Position just after "dy/dx =" or "y' =", if the text starts that way.
std::optional<std::size_t> after_lhs(std::string_view s) {
  std::size_t i = skip_space(s, 0);
  auto match = [&](std::string_view word) {
    std::size_t j = i;
    for (char c : word) {
      j = skip_space(s, j);
      if (j >= s.size() || s[j] != c) return false;
      ++j;
    }
    i = j;
    return true;
  };
  const std::size_t start = i;
  if (!match("dy/dx")) {
    i = start;
    if (!match("y'")) return std::nullopt;
  }
  i = skip_space(s, i);
  if (i >= s.size() || s[i] != '=') throw SyntaxError("expected '='", i);
  return i + 1;
}

}  // namespace

RationalFn parse_expression(std::string_view text) { return parse_at(text, 0); }

Poly2 parse_poly(std::string_view text) {
  RationalFn f = parse_at(text, 0);
  if (!f.den().is_constant()) throw SyntaxError("expected a polynomial", 0);
  return f.num() * (1 / f.den().leading_coeff());
}

OdeInput parse_ode(std::string_view text) {
  if (auto rhs = after_lhs(text)) {
    return normalized(text, parse_at(text.substr(*rhs), *rhs));
  }
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw SyntaxError("expected 'dy/dx = <expr>' or '<M> ; <N>'", skip_space(text, 0));
  }
  RationalFn M = parse_at(text.substr(0, semi), 0);
  RationalFn N = parse_at(text.substr(semi + 1), semi + 1);
  if (N.num().is_zero()) throw ZeroDenominator();
  return normalized(text, M / N);
}

std::string render_ode(const OdeInput& o) {
  if (o.N == Poly2(1)) return "dy/dx = " + to_string(o.M);
  return "dy/dx = (" + to_string(o.M) + ")/(" + to_string(o.N) + ")";
}

}  // namespace liouv
