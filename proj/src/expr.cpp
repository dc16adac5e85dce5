#include "weylkit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace weylkit {

ParseError::ParseError(const std::string& what, Span span)
    : UsageError("cli", what + " at " + std::to_string(span.begin) + ".." + std::to_string(span.end)),
      span_(span) {}

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind = Kind::End;
  std::string text;
  Span span;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("expected denominator digits", {start, i});
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::Kind::Number, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
    }
    ++i;
    out.push_back({k, std::string(1, c), {start, i}});
  }
  out.push_back({Token::Kind::End, "", {s.size(), s.size()}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>& declared)
      : toks_(std::move(tokens)), declared_(declared) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End) throw ParseError("unexpected token '" + peek().text + "'", peek().span);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

  ExprPtr expr() {
    const std::size_t begin = peek().span.begin;
    std::vector<ExprPtr> items{term()};
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const Token op = take();
      ExprPtr t = term();
      if (op.kind == Token::Kind::Minus) {
        ExprNode neg;
        neg.kind = ExprNode::Kind::Neg;
        neg.span = {op.span.begin, t->span.end};
        neg.children = {t};
        t = make(std::move(neg));
      }
      items.push_back(t);
    }
    if (items.size() == 1) return items[0];
    ExprNode add;
    add.kind = ExprNode::Kind::Add;
    add.span = {begin, items.back()->span.end};
    add.children = std::move(items);
    return make(std::move(add));
  }

  ExprPtr term() {
    if (peek().kind == Token::Kind::Minus) {
      const Token op = take();
      ExprPtr inner = product();
      ExprNode neg;
      neg.kind = ExprNode::Kind::Neg;
      neg.span = {op.span.begin, inner->span.end};
      neg.children = {inner};
      return make(std::move(neg));
    }
    return product();
  }

  ExprPtr product() {
    std::vector<ExprPtr> items{factor()};
    while (peek().kind == Token::Kind::Star) {
      take();
      items.push_back(factor());
    }
    if (items.size() == 1) return items[0];
    ExprNode mul;
    mul.kind = ExprNode::Kind::Mul;
    mul.span = {items.front()->span.begin, items.back()->span.end};
    mul.children = std::move(items);
    return make(std::move(mul));
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek().kind != Token::Kind::Caret) return base;
    take();
    const Token t = peek();
    if (t.kind != Token::Kind::Number || t.text.find('/') != std::string::npos)
      throw ParseError("exponent must be a non-negative integer", t.span);
    take();
    unsigned long e = 0;
    try {
      e = std::stoul(t.text);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", t.span);
    }
    if (e > 1000) throw ParseError("exponent out of range", t.span);
    ExprNode pw;
    pw.kind = ExprNode::Kind::Pow;
    pw.exponent = static_cast<unsigned>(e);
    pw.span = {base->span.begin, t.span.end};
    pw.children = {base};
    return make(std::move(pw));
  }

  ExprPtr atom() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        take();
        ExprNode n;
        n.kind = ExprNode::Kind::Number;
        n.value = Rational::parse(t.text);
        n.span = t.span;
        return make(std::move(n));
      }
      case Token::Kind::Ident: {
        take();
        if (std::find(declared_.begin(), declared_.end(), t.text) == declared_.end())
          throw ParseError("undeclared identifier '" + t.text + "'", t.span);
        ExprNode n;
        n.kind = ExprNode::Kind::Symbol;
        n.name = t.text;
        n.span = t.span;
        return make(std::move(n));
      }
      case Token::Kind::LParen: {
        take();
        ExprPtr inner = expr();
        if (peek().kind != Token::Kind::RParen) throw ParseError("expected ')'", peek().span);
        take();
        return inner;
      }
      case Token::Kind::End:
        throw ParseError("unexpected end of input", t.span);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.span);
    }
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& declared_;
  std::size_t pos_ = 0;
};

// Binding strength used when printing: sums < unary minus < products < powers.
int precedence(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Add: return 0;
    case ExprNode::Kind::Neg: return 1;
    case ExprNode::Kind::Mul: return 2;
    case ExprNode::Kind::Pow: return 3;
    case ExprNode::Kind::Number: return n.value.is_integer() && n.value.sign() >= 0 ? 4 : 2;
    default: return 4;
  }
}

std::string print_at(const ExprNode& n, int min_prec) {
  std::string body;
  switch (n.kind) {
    case ExprNode::Kind::Number: body = n.value.to_string(); break;
    case ExprNode::Kind::Symbol: body = n.name; break;
    case ExprNode::Kind::Neg: body = "-" + print_at(*n.children[0], 2); break;
    case ExprNode::Kind::Pow: body = print_at(*n.children[0], 4) + "^" + std::to_string(n.exponent); break;
    case ExprNode::Kind::Mul:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) body += "*";
        // A fraction literal followed by '^' would fuse, so products bracket
        // only what they must.
        body += print_at(*n.children[i], 3);
      }
      break;
    case ExprNode::Kind::Add:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const ExprNode& c = *n.children[i];
        if (i == 0) {
          body += print_at(c, 1);
        } else if (c.kind == ExprNode::Kind::Neg) {
          body += " - " + print_at(*c.children[0], 2);
        } else {
          body += " + " + print_at(c, 1);
        }
      }
      break;
  }
  return precedence(n) < min_prec ? "(" + body + ")" : body;
}

}  // namespace

ExprPtr parse_expr(std::string_view text, const std::vector<std::string>& declared) {
  if (text.find_first_not_of(" \t\n") == std::string_view::npos)
    throw ParseError("empty expression", {0, text.size()});
  return Parser(lex(text), declared).parse();
}

std::vector<ExprPtr> parse_expr_list(std::string_view text, const std::vector<std::string>& declared) {
  std::vector<ExprPtr> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_expr(text.substr(start, i - start), declared));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in list item ") + std::to_string(out.size() + 1) + ": " + e.what(),
                         {start + e.span().begin, start + e.span().end});
      }
      start = i + 1;
    }
  }
  return out;
}

std::string print_expr(const ExprNode& node) { return print_at(node, 0); }

Poly evaluate_poly(const ExprNode& node, const PolyRing& ring) {
  auto leaf = [&](const ExprNode& n) -> Poly {
    if (n.kind == ExprNode::Kind::Number) return ring.constant(n.value);
    auto idx = ring.index_of(n.name);
    if (!idx) throw ParseError("'" + n.name + "' is not a polynomial variable here", n.span);
    return ring.var(*idx);
  };
  auto mul = [](const Poly& a, const Poly& b) { return a * b; };
  return fold_expr<Poly>(node, leaf, mul);
}

Poly parse_poly(std::string_view text, const PolyRing& ring) {
  return evaluate_poly(*parse_expr(text, ring.names()), ring);
}

std::vector<Poly> parse_poly_list(std::string_view text, const PolyRing& ring) {
  std::vector<Poly> out;
  for (const auto& e : parse_expr_list(text, ring.names())) out.push_back(evaluate_poly(*e, ring));
  return out;
}

}  // namespace weylkit
