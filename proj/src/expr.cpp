#include "qhforge/expr.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace qhforge::expr {

using algebra::AlgebraElement;
using algebra::RingPtr;
using novikov::NovikovMonomial;
using novikov::NovikovScalar;

namespace {

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { number, symbol, pow, mul, add } kind;
  Rational number;                        // number
  std::string symbol;                     // symbol
  NodePtr base;                           // pow
  Rational exponent;                      // pow
  std::vector<NodePtr> operands;          // mul
  std::vector<std::pair<int, NodePtr>> terms; // add: (sign, node)
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  NodePtr parse() {
    NodePtr e = parse_expr();
    expect(Tok::end, "end of input");
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t at_ = 0;

  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  static bool starts_primary(Tok k) {
    return k == Tok::integer || k == Tok::ident || k == Tok::lparen;
  }

  NodePtr parse_expr() {
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::add;
    node->pos = peek().pos;
    int sign = 1;
    if (accept(Tok::minus))
      sign = -1;
    else
      accept(Tok::plus);
    node->terms.emplace_back(sign, parse_term());
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = take().kind == Tok::plus ? 1 : -1;
      node->terms.emplace_back(sign, parse_term());
    }
    if (node->terms.size() == 1 && node->terms[0].first == 1)
      return std::move(node->terms[0].second);
    return node;
  }

  NodePtr parse_term() {
    auto node = std::make_unique<Node>();
    node->kind = Node::Kind::mul;
    node->pos = peek().pos;
    node->operands.push_back(parse_factor());
    while (true) {
      if (accept(Tok::star)) {
        node->operands.push_back(parse_factor());
      } else if (starts_primary(peek().kind)) {
        node->operands.push_back(parse_factor());
      } else {
        break;
      }
    }
    if (node->operands.size() == 1) return std::move(node->operands[0]);
    return node;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_primary();
    if (accept(Tok::caret)) {
      auto node = std::make_unique<Node>();
      node->kind = Node::Kind::pow;
      node->pos = base->pos;
      node->exponent = parse_signed_rational();
      node->base = std::move(base);
      return node;
    }
    return base;
  }

  Rational parse_signed_rational() {
    bool neg = accept(Tok::minus);
    if (peek().kind != Tok::integer) throw ParseError("expected an exponent", peek().pos);
    Rational r = parse_rational_literal();
    return neg ? Rational(-r) : r;
  }

  // INT [ '/' INT ]
  Rational parse_rational_literal() {
    Token num = take();
    Integer n(num.text);
    if (peek().kind == Tok::slash && tokens_[at_ + 1].kind == Tok::integer) {
      take();
      Token den = take();
      Integer d(den.text);
      if (d == 0) throw ParseError("zero denominator", den.pos);
      return Rational(n, d);
    }
    return Rational(n);
  }

  NodePtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::integer) {
      auto node = std::make_unique<Node>();
      node->kind = Node::Kind::number;
      node->pos = t.pos;
      node->number = parse_rational_literal();
      return node;
    }
    if (t.kind == Tok::ident) {
      Token tok = take();
      auto node = std::make_unique<Node>();
      node->kind = Node::Kind::symbol;
      node->pos = tok.pos;
      node->symbol = tok.text;
      return node;
    }
    if (t.kind == Tok::lparen) {
      take();
      NodePtr inner = parse_expr();
      expect(Tok::rparen, "')'");
      return inner;
    }
    throw ParseError("expected a number, symbol or parenthesized expression", t.pos);
  }
};

// Element evaluation; when ring is null only scalars are accepted and the
// result is reported through the scalar channel.
struct Eval {
  const RingPtr* ring; // null for scalar-only parsing

  AlgebraElement element(const Node& n) const {
    switch (n.kind) {
      case Node::Kind::number:
        return AlgebraElement::unit(*ring).scaled(NovikovScalar(n.number));
      case Node::Kind::symbol: {
        if (n.symbol == "q")
          return AlgebraElement::unit(*ring).times_monomial(NovikovMonomial::from_qt(1, 0));
        if (n.symbol == "t")
          return AlgebraElement::unit(*ring).times_monomial(NovikovMonomial::from_qt(0, 1));
        int g = (*ring)->generator_index(n.symbol);
        if (g < 0)
          throw UnknownGeneratorError("unknown generator '" + n.symbol + "' in ring " +
                                      (*ring)->name);
        return AlgebraElement::basis_element(*ring, (*ring)->generators[g].basis_index);
      }
      case Node::Kind::pow: {
        if (n.base->kind == Node::Kind::symbol && n.base->symbol == "q") {
          if (!is_integer(n.exponent))
            throw ParseError("q exponents must be integers", n.pos);
          return AlgebraElement::unit(*ring).times_monomial(
              NovikovMonomial::from_qt(static_cast<long>(to_integer(n.exponent)), 0));
        }
        if (n.base->kind == Node::Kind::symbol && n.base->symbol == "t") {
          return AlgebraElement::unit(*ring).times_monomial(
              NovikovMonomial::from_qt(0, n.exponent));
        }
        if (!is_integer(n.exponent) || n.exponent < 0)
          throw ParseError("element powers must be nonnegative integers", n.pos);
        return power(element(*n.base), static_cast<long>(to_integer(n.exponent)));
      }
      case Node::Kind::mul: {
        AlgebraElement acc = element(*n.operands[0]);
        for (std::size_t i = 1; i < n.operands.size(); ++i)
          acc = multiply(acc, element(*n.operands[i]));
        return acc;
      }
      case Node::Kind::add: {
        AlgebraElement acc = AlgebraElement::zero(*ring);
        for (const auto& [sign, term] : n.terms) {
          AlgebraElement v = element(*term);
          acc = sign > 0 ? acc + v : acc - v;
        }
        return acc;
      }
    }
    throw ParseError("malformed expression tree", n.pos);
  }

  NovikovScalar scalar(const Node& n) const {
    switch (n.kind) {
      case Node::Kind::number:
        return NovikovScalar(n.number);
      case Node::Kind::symbol: {
        if (n.symbol == "q") return NovikovScalar::monomial(NovikovMonomial::from_qt(1, 0));
        if (n.symbol == "t") return NovikovScalar::monomial(NovikovMonomial::from_qt(0, 1));
        throw ParseError("'" + n.symbol + "' is not a scalar symbol", n.pos);
      }
      case Node::Kind::pow: {
        if (n.base->kind == Node::Kind::symbol && n.base->symbol == "q") {
          if (!is_integer(n.exponent))
            throw ParseError("q exponents must be integers", n.pos);
          return NovikovScalar::monomial(
              NovikovMonomial::from_qt(static_cast<long>(to_integer(n.exponent)), 0));
        }
        if (n.base->kind == Node::Kind::symbol && n.base->symbol == "t")
          return NovikovScalar::monomial(NovikovMonomial::from_qt(0, n.exponent));
        if (!is_integer(n.exponent) || n.exponent < 0)
          throw ParseError("scalar powers must be nonnegative integers", n.pos);
        NovikovScalar base = scalar(*n.base);
        NovikovScalar acc = NovikovScalar::one();
        for (Integer i = 0; i < to_integer(n.exponent); ++i) acc = acc * base;
        return acc;
      }
      case Node::Kind::mul: {
        NovikovScalar acc = scalar(*n.operands[0]);
        for (std::size_t i = 1; i < n.operands.size(); ++i) acc = acc * scalar(*n.operands[i]);
        return acc;
      }
      case Node::Kind::add: {
        NovikovScalar acc;
        for (const auto& [sign, term] : n.terms) {
          NovikovScalar v = scalar(*term);
          acc = sign > 0 ? acc + v : acc - v;
        }
        return acc;
      }
    }
    throw ParseError("malformed expression tree", n.pos);
  }
};

}  // namespace

AlgebraElement parse_element(const RingPtr& ring, std::string_view text) {
  Parser parser(text);
  NodePtr ast = parser.parse();
  Eval eval{&ring};
  return eval.element(*ast);
}

NovikovScalar parse_scalar(std::string_view text) {
  Parser parser(text);
  NodePtr ast = parser.parse();
  Eval eval{nullptr};
  return eval.scalar(*ast);
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, std::size_t pos) {
    try {
      return Integer(std::string(s));
    } catch (const std::exception&) {
      throw ParseError("expected an integer", pos);
    }
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  Integer n = parse_int(text.substr(0, slash), 0);
  Integer d = parse_int(text.substr(slash + 1), slash + 1);
  if (d == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(n, d);
}

}  // namespace qhforge::expr
