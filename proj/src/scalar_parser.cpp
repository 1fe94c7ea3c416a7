#include "hecke/scalar_parser.hpp"

#include <cctype>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return value;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction value = term();
    while (true) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        value /= d;
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    std::size_t at = pos_;
    RationalFunction base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) throw ParseError("negative power of zero", at);
    return base.pow(negative ? -e : e);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction value = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return RationalFunction(mpq_class(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return RationalFunction::variable(*v);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace hecke
