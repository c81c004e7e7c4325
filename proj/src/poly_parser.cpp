#include <cctype>

#include "affgebra/errors.hpp"
#include "affgebra/poly.hpp"

namespace affgebra {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ctx& ctx) : text_(text), ctx_(ctx) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    bool negate = accept('-');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (accept('/')) {
        std::size_t at = pos_;
        Rational den(digits());
        if (den == 0) throw ParseError("zero denominator", at);
        value /= den;
      }
      value.canonicalize();
      return Poly::constant(ctx_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ctx_->index_of(name);
      if (!idx) {
        throw UnknownVariable("unknown variable '" + std::string(name) + "' at offset " + std::to_string(start));
      }
      return Poly::variable(ctx_, *idx);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ctx& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ctx& ctx) { return PolyParser(text, ctx).parse(); }

}  // namespace affgebra
