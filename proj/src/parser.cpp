#include "gwdeg/parser.hpp"

#include <cctype>

namespace gwdeg {

namespace {

struct Token {
  enum class Kind { integer, symbol, plus, minus, star, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  int col;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int col = static_cast<int>(pos_) + 1;
    if (pos_ >= s_.size()) {
      tok_ = {Token::Kind::end, "", col};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Token::Kind::integer, s_.substr(start, pos_ - start), col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_ = {Token::Kind::symbol, s_.substr(start, pos_ - start), col};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Kind::plus, "+", col}; return;
      case '-': tok_ = {Token::Kind::minus, "-", col}; return;
      case '*': tok_ = {Token::Kind::star, "*", col}; return;
      case '^': tok_ = {Token::Kind::caret, "^", col}; return;
      case '(': tok_ = {Token::Kind::lparen, "(", col}; return;
      case ')': tok_ = {Token::Kind::rparen, ")", col}; return;
      default:
        fail(Errc::syntax_error, std::string("unexpected character '") + c + "'", -1, col);
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  Token tok_{Token::Kind::end, "", 1};
};

class Parser {
 public:
  Parser(const std::string& text, const FieldDescriptor& f, const VarList& vars)
      : lex_(text), field_(f), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (lex_.peek().kind != Token::Kind::end)
      fail(Errc::syntax_error, "unexpected '" + lex_.peek().text + "'", -1, lex_.peek().col);
    return p;
  }

 private:
  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::Kind::plus) {
        lex_.take();
        acc = acc + term();
      } else if (k == Token::Kind::minus) {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      acc = acc * unary();
    }
    return acc;
  }

  MultiPoly unary() {
    if (lex_.peek().kind == Token::Kind::minus) {
      lex_.take();
      return -unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (lex_.peek().kind != Token::Kind::caret) return base;
    Token caret = lex_.take();
    Token e = lex_.peek();
    if (e.kind != Token::Kind::integer)
      fail(Errc::syntax_error, "expected a nonnegative integer exponent after '^'", -1, e.col);
    lex_.take();
    unsigned long exp = 0;
    try {
      exp = std::stoul(e.text);
    } catch (const std::exception&) {
      fail(Errc::syntax_error, "exponent out of range", -1, e.col);
    }
    (void)caret;
    return base.pow(exp);
  }

  MultiPoly primary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::integer: {
        lex_.take();
        Integer v(t.text);
        return MultiPoly::constant(field_, vars_,
                                   FieldElement::from_base(field_, Rational(v)));
      }
      case Token::Kind::symbol: {
        lex_.take();
        for (size_t i = 0; i < vars_->size(); ++i)
          if ((*vars_)[i] == t.text) return MultiPoly::variable(field_, vars_, i);
        if (!field_.is_base_only() && field_.generator() == t.text)
          return MultiPoly::constant(field_, vars_, FieldElement::generator(field_));
        fail(Errc::unknown_symbol, "unknown symbol '" + t.text + "'", -1, t.col);
      }
      case Token::Kind::lparen: {
        lex_.take();
        MultiPoly p = expr();
        if (lex_.peek().kind != Token::Kind::rparen)
          fail(Errc::syntax_error, "expected ')'", -1, lex_.peek().col);
        lex_.take();
        return p;
      }
      default:
        fail(Errc::syntax_error, "unexpected '" + (t.kind == Token::Kind::end
                                                        ? std::string("end of input")
                                                        : t.text) + "'",
             -1, t.col);
    }
  }

  Lexer lex_;
  const FieldDescriptor& field_;
  const VarList& vars_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const FieldDescriptor& f, const VarList& vars) {
  return Parser(text, f, vars).parse();
}

FieldElement parse_field_element(const std::string& text, const FieldDescriptor& f) {
  static const VarList no_vars = make_vars({});
  MultiPoly p = parse_poly(text, f, no_vars);
  hard_check(p.is_constant(), "variable-free expression produced a nonconstant");
  return p.constant_value();
}

}  // namespace gwdeg
