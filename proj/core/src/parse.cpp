#include "dgcm/parse.hpp"

#include <cctype>
#include <string>

#include "dgcm/error.hpp"

namespace dgcm {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

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

  Poly expr() {
    const auto& f = ring_.field();
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), f);
      } else if (accept('-')) {
        acc = sub(acc, term(), f);
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = mul(acc, unary(), ring_.field());
    return acc;
  }

  Poly unary() {
    if (accept('-')) return neg(unary(), ring_.field());
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a non-negative integer exponent");
      }
      unsigned long e = read_integer();
      if (e > 1000) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e), ring_.field());
    }
    return base;
  }

  unsigned long read_integer() {
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v < 100000) v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Literals are reduced as they are read so long inputs cannot overflow.
      const auto& f = ring_.field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = f.add(f.mul(v, 10 % f.characteristic()), f.from_int(text_[pos_] - '0'));
        ++pos_;
      }
      return Poly::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(std::string_view text, const Ring& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace dgcm
