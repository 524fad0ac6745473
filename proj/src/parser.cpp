#include "fwb/parser.hpp"

#include <cctype>

#include "fwb/error.hpp"

namespace fwb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::kParse, "syntax error at position " + std::to_string(pos_) + ": " + msg);
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

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      error("expected integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) error("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial f = term();
    if (negate) f = -f;
    for (;;) {
      if (accept('+')) {
        f = f + term();
      } else if (accept('-')) {
        f = f - term();
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) error("expected ')'");
      if (accept('^')) inner = inner.pow(integer());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->characteristic()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      Monomial m;
      std::uint64_t e = 1;
      if (accept('^')) e = integer();
      if (e > static_cast<std::uint64_t>(INT32_MAX)) error("exponent too large");
      m[idx] = static_cast<Exponent>(e);
      return Polynomial::from_monomial(ring_, m, 1);
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  bool blank = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  }
  if (blank) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_polynomial(text.substr(start, i - start), ring));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace fwb
