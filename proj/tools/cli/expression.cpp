#include "expression.hpp"

#include <cctype>
#include <vector>

#include "qpflow/rational.hpp"

namespace qpflow::cli {

namespace {

enum class Tok { number, name, op, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c) || c == '.') {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::name, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (s.substr(i, 2) == "\xC2\xB7") {
      out.push_back({Tok::op, "*", i});
      i += 2;
    } else if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({Tok::op, "-", i});
      i += 3;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::op, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw UsageError("unexpected character '" + std::string(1, static_cast<char>(c)) +
                       "' at position " + std::to_string(i) + " in \"" + std::string(s) + "\"");
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(NumberField const& field, std::string_view text, NameResolver const& resolve)
      : field_(field), text_(text), tokens_(tokenize(text)), resolve_(resolve) {}

  FieldElement parse() {
    FieldElement x = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return x;
  }

 private:
  Token const& peek() const { return tokens_[pos_]; }
  bool at_op(char c) const { return peek().kind == Tok::op && peek().text[0] == c; }

  [[noreturn]] void fail(std::string const& what) const {
    throw UsageError(what + " at position " + std::to_string(peek().pos) + " in \"" +
                     std::string(text_) + "\"");
  }

  FieldElement expr() {
    FieldElement x = term();
    while (at_op('+') || at_op('-')) {
      char op = tokens_[pos_++].text[0];
      FieldElement y = term();
      x = op == '+' ? x + y : x - y;
    }
    return x;
  }

  bool starts_atom() const {
    return peek().kind == Tok::number || peek().kind == Tok::name || at_op('(');
  }

  FieldElement term() {
    FieldElement x = unary();
    while (true) {
      if (at_op('*')) {
        ++pos_;
        x = x * unary();
      } else if (at_op('/')) {
        ++pos_;
        FieldElement y = unary();
        if (y.is_zero()) fail("division by zero");
        x = x / y;
      } else if (starts_atom()) {
        x = x * power();
      } else {
        return x;
      }
    }
  }

  FieldElement unary() {
    if (at_op('-')) {
      ++pos_;
      return -unary();
    }
    if (at_op('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  FieldElement power() {
    FieldElement base = atom();
    if (!at_op('^')) return base;
    ++pos_;
    bool paren = at_op('(');
    if (paren) ++pos_;
    bool negative = false;
    if (at_op('-')) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Tok::number || peek().text.find('.') != std::string::npos) {
      fail("exponent must be an integer");
    }
    long e = std::stol(tokens_[pos_++].text);
    if (paren) {
      if (!at_op(')')) fail("expected ')'");
      ++pos_;
    }
    if (negative && base.is_zero()) fail("zero to a negative power");
    return pow(base, negative ? -e : e);
  }

  FieldElement atom() {
    Token const& t = peek();
    if (t.kind == Tok::number) {
      ++pos_;
      Decimal d;
      try {
        d = parse_decimal(t.text);
      } catch (std::exception const&) {
        fail("malformed number '" + t.text + "'");
      }
      return field_.from_rational(d.value);
    }
    if (t.kind == Tok::name) {
      ++pos_;
      if (t.text == "g") return field_.generator();
      if (!resolve_) fail("unknown name '" + t.text + "'");
      FieldElement x = resolve_(t.text);
      if (!(x.field() == field_)) fail("'" + t.text + "' belongs to a different field");
      return x;
    }
    if (at_op('(')) {
      ++pos_;
      FieldElement x = expr();
      if (!at_op(')')) fail("expected ')'");
      ++pos_;
      return x;
    }
    fail(t.kind == Tok::end ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  NumberField field_;
  std::string_view text_;
  std::vector<Token> tokens_;
  NameResolver const& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(NumberField const& field, std::string_view text,
                           NameResolver const& resolve) {
  return Parser(field, text, resolve).parse();
}

}  // namespace qpflow::cli
