#include "autalg/parse.hpp"

#include <cctype>

namespace autalg {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const VarContext& ctx, ParseMode mode) : toks_(tokenize(src)), ctx_(ctx), mode_(mode) {}

  Expr parse() {
    if (peek().kind == Token::Kind::End) throw ParseError("empty expression", 0);
    Expr e = expr();
    if (peek().kind != Token::Kind::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool accept(const char* sym) {
    if (peek().kind == Token::Kind::Symbol && peek().text == sym) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(const char* sym) {
    if (!accept(sym)) throw ParseError(std::string("expected '") + sym + "'", peek().pos);
  }

  Expr binary(Expr::Kind k, Expr a, Expr b, size_t pos) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      size_t pos = peek().pos;
      if (accept("+")) {
        lhs = binary(Expr::Kind::Sum, std::move(lhs), term(), pos);
      } else if (accept("-")) {
        lhs = binary(Expr::Kind::Difference, std::move(lhs), term(), pos);
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      size_t pos = peek().pos;
      if (accept("*")) {
        lhs = binary(Expr::Kind::Product, std::move(lhs), unary(), pos);
      } else if (accept("/")) {
        lhs = binary(Expr::Kind::Quotient, std::move(lhs), unary(), pos);
      } else if (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::Number ||
                 (peek().kind == Token::Kind::Symbol && (peek().text == "(" || peek().text == "["))) {
        throw ParseError("juxtaposition is not allowed; use '*'", peek().pos);
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    size_t pos = peek().pos;
    if (accept("-")) {
      Expr e;
      e.kind = Expr::Kind::Negation;
      e.pos = pos;
      e.kids.push_back(unary());
      return e;
    }
    if (accept("+")) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    size_t pos = peek().pos;
    if (accept("^")) {
      const Token& t = peek();
      if (t.kind != Token::Kind::Number) throw ParseError("exponent must be a nonnegative integer", t.pos);
      if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent) throw ParseError("exponent too large", t.pos);
      Expr e;
      e.kind = Expr::Kind::Power;
      e.pos = pos;
      e.exponent = static_cast<unsigned>(std::stoul(t.text));
      ++i_;
      e.kids.push_back(std::move(base));
      if (peek().kind == Token::Kind::Symbol && peek().text == "^")
        throw ParseError("ambiguous repeated '^'; use parentheses", peek().pos);
      return e;
    }
    return base;
  }

  Expr atom() {
    const Token t = peek();
    if (t.kind == Token::Kind::Number) {
      ++i_;
      Expr e;
      e.kind = Expr::Kind::Number;
      e.pos = t.pos;
      e.value = Rational(Integer(t.text));
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      ++i_;
      const bool field = mode_ == ParseMode::RationalFunction && t.text == ctx_.field_var();
      if (!field && !ctx_.index_of(t.text)) throw ParseError("unknown variable '" + t.text + "'", t.pos);
      Expr e;
      e.kind = Expr::Kind::Variable;
      e.pos = t.pos;
      e.name = t.text;
      return e;
    }
    if (accept("(")) {
      Expr e;
      e.kind = Expr::Kind::Group;
      e.pos = t.pos;
      e.kids.push_back(expr());
      expect(")");
      return e;
    }
    if (accept("[")) {
      if (mode_ != ParseMode::Free) throw ParseError("commutator brackets are only allowed in free mode", t.pos);
      Expr a = expr();
      expect(",");
      Expr b = expr();
      expect("]");
      return binary(Expr::Kind::Commutator, std::move(a), std::move(b), t.pos);
    }
    if (t.kind == Token::Kind::End) throw ParseError("unexpected end of input", t.pos);
    throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
  const VarContext& ctx_;
  ParseMode mode_;
};

template <class P, class Leaf, class Divide>
P lower_generic(const Expr& e, const ContextPtr& ctx, const Leaf& leaf, const Divide& divide) {
  auto rec = [&](const Expr& k) { return lower_generic<P>(k, ctx, leaf, divide); };
  switch (e.kind) {
    case Expr::Kind::Number:
      return P::constant(ctx, typename P::Coeff(e.value));
    case Expr::Kind::Variable:
      return leaf(e);
    case Expr::Kind::Sum:
      return rec(e.kids[0]) + rec(e.kids[1]);
    case Expr::Kind::Difference:
      return rec(e.kids[0]) - rec(e.kids[1]);
    case Expr::Kind::Product:
      return rec(e.kids[0]) * rec(e.kids[1]);
    case Expr::Kind::Quotient:
      return divide(rec(e.kids[0]), rec(e.kids[1]), e.pos);
    case Expr::Kind::Power:
      return rec(e.kids[0]).pow(e.exponent);
    case Expr::Kind::Commutator: {
      P a = rec(e.kids[0]), b = rec(e.kids[1]);
      return a * b - b * a;
    }
    case Expr::Kind::Negation:
      return -rec(e.kids[0]);
    case Expr::Kind::Group:
      return rec(e.kids[0]);
  }
  throw std::logic_error("unknown expression node");
}

template <class P>
P divide_by_constant(const P& a, const P& b, size_t pos) {
  if (!b.is_unit()) throw ParseError("division is only allowed by a nonzero constant", pos);
  return a.scaled(typename P::Coeff(1) / b.constant_term());
}

}  // namespace

Expr parse_expression(std::string_view source, const VarContext& ctx, ParseMode mode) {
  return Parser(source, ctx, mode).parse();
}

CommPoly lower_comm(const Expr& e, const ContextPtr& ctx) {
  return lower_generic<CommPoly>(
      e, ctx, [&](const Expr& v) { return CommPoly::variable(ctx, *ctx->index_of(v.name)); },
      divide_by_constant<CommPoly>);
}

FreePoly lower_free(const Expr& e, const ContextPtr& ctx) {
  return lower_generic<FreePoly>(
      e, ctx, [&](const Expr& v) { return FreePoly::variable(ctx, *ctx->index_of(v.name)); },
      divide_by_constant<FreePoly>);
}

RPoly lower_rpoly(const Expr& e, const ContextPtr& ctx) {
  return lower_generic<RPoly>(
      e, ctx,
      [&](const Expr& v) {
        if (auto i = ctx->index_of(v.name)) return RPoly::variable(ctx, *i);
        return RPoly::constant(ctx, RatFunc::variable());
      },
      [](const RPoly& a, const RPoly& b, size_t pos) {
        if (b.is_zero() || !b.is_constant()) throw ParseError("division is only allowed by a nonzero element of Q(z)", pos);
        return a.scaled(RatFunc(1) / b.constant_term());
      });
}

CommPoly parse_comm(std::string_view source, const ContextPtr& ctx) {
  return lower_comm(parse_expression(source, *ctx, ParseMode::Commutative), ctx);
}

FreePoly parse_free(std::string_view source, const ContextPtr& ctx) {
  return lower_free(parse_expression(source, *ctx, ParseMode::Free), ctx);
}

RPoly parse_rpoly(std::string_view source, const ContextPtr& ctx) {
  return lower_rpoly(parse_expression(source, *ctx, ParseMode::RationalFunction), ctx);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace autalg
