#include "loja/poly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace loja {

ParseError::ParseError(Kind kind, std::size_t position, std::string token,
                       const std::string& what)
    : std::runtime_error(what), kind_(kind), position_(position), token_(std::move(token)) {}

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end, bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Tok::end, "", start};
    char c = s_[i_];
    if (digit(c)) {
      while (i_ < s_.size() && digit(s_[i_])) ++i_;
      // decimal literals such as "1.5" are not rational literals
      if (i_ < s_.size() && s_[i_] == '.') {
        std::size_t j = i_;
        while (j < s_.size() && (s_[j] == '.' || ident_char(s_[j]) || digit(s_[j]))) ++j;
        std::string tok(s_.substr(start, j - start));
        throw ParseError(ParseError::Kind::non_rational_literal, start, tok,
                         "non-rational literal '" + tok + "' at position " +
                             std::to_string(start));
      }
      return {Tok::number, std::string(s_.substr(start, i_ - start)), start};
    }
    if (c == '.') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && digit(s_[j])) ++j;
      std::string tok(s_.substr(start, j - start));
      throw ParseError(ParseError::Kind::non_rational_literal, start, tok,
                       "non-rational literal '" + tok + "' at position " + std::to_string(start));
    }
    if (ident_start(c)) {
      while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
      return {Tok::ident, std::string(s_.substr(start, i_ - start)), start};
    }
    // U+2212 MINUS SIGN
    if (s_.compare(i_, 3, "\xE2\x88\x92") == 0) {
      i_ += 3;
      return {Tok::minus, "\xE2\x88\x92", start};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::plus, "+", start};
      case '-': return {Tok::minus, "-", start};
      case '*': return {Tok::star, "*", start};
      case '^': return {Tok::caret, "^", start};
      case '/': return {Tok::slash, "/", start};
      case '(': return {Tok::lparen, "(", start};
      case ')': return {Tok::rparen, ")", start};
      default: break;
    }
    // take the whole UTF-8 sequence for the error message
    while (i_ < s_.size() && (static_cast<unsigned char>(s_[i_]) & 0xC0) == 0x80) ++i_;
    return {Tok::bad, std::string(s_.substr(start, i_ - start)), start};
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : lex_(text), vars_(vars) {
    advance();
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    if (cur_.kind != Tok::end) fail("unexpected token");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    std::string tok = cur_.kind == Tok::end ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(ParseError::Kind::syntax, cur_.pos, cur_.text,
                     msg + " " + tok + " at position " + std::to_string(cur_.pos));
  }

  void advance() { cur_ = lex_.next(); }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool minus = cur_.kind == Tok::minus;
      advance();
      MultiPoly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (cur_.kind == Tok::star) {
      advance();
      acc *= unary();
    }
    if (cur_.kind == Tok::number || cur_.kind == Tok::ident || cur_.kind == Tok::lparen)
      fail("implicit multiplication is not allowed before");
    return acc;
  }

  MultiPoly unary() {
    if (cur_.kind == Tok::minus) {
      advance();
      return -unary();
    }
    if (cur_.kind == Tok::plus) {
      advance();
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (cur_.kind == Tok::caret) {
      advance();
      if (cur_.kind != Tok::number) fail("expected a non-negative integer exponent, got");
      unsigned long k = 0;
      try {
        k = std::stoul(cur_.text);
      } catch (const std::exception&) {
        fail("exponent out of range:");
      }
      if (k > 10000) fail("exponent out of range:");
      advance();
      if (cur_.kind == Tok::caret) fail("chained exponents need parentheses:");
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  MultiPoly primary() {
    switch (cur_.kind) {
      case Tok::number: {
        std::string num = cur_.text;
        advance();
        if (cur_.kind == Tok::slash) {
          advance();
          if (cur_.kind != Tok::number) fail("expected a denominator, got");
          std::string den = cur_.text;
          if (BigInt(den) == 0) fail("zero denominator");
          advance();
          num += "/" + den;
        }
        return MultiPoly::constant(vars_, parse_rational(num));
      }
      case Tok::ident: {
        auto it = std::find(vars_.begin(), vars_.end(), cur_.text);
        if (it == vars_.end()) {
          throw ParseError(ParseError::Kind::unknown_variable, cur_.pos, cur_.text,
                           "unknown variable '" + cur_.text + "' at position " +
                               std::to_string(cur_.pos));
        }
        advance();
        return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        advance();
        MultiPoly p = expr();
        if (cur_.kind != Tok::rparen) fail("expected ')', got");
        advance();
        return p;
      }
      default:
        fail("unexpected token");
    }
  }

  Lexer lex_;
  const std::vector<std::string>& vars_;
  Token cur_{Tok::end, "", 0};
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw std::invalid_argument("variable list is empty");
  std::set<std::string> seen(variables.begin(), variables.end());
  if (seen.size() != variables.size()) throw std::invalid_argument("duplicate variable names");
  return Parser(text, variables).parse();
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (digit(text[i])) {
      while (i < text.size() && digit(text[i])) ++i;
      continue;
    }
    if (ident_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string id(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
      continue;
    }
    ++i;
  }
  return out;
}

}  // namespace loja
