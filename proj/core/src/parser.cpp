#include "frobgrow/parser.hpp"

#include <cctype>
#include <string>

#include "frobgrow/errors.hpp"

namespace frobgrow {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRingPtr& ring) : s_(text), ring_(ring) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
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

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) {
      std::size_t at = pos_ - 1;
      MultiPoly rhs = unary();
      try {
        acc = acc * rhs;
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        fail_at(e.what(), at);
      }
    }
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    std::size_t at = pos_ - 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a non-negative integer exponent");
    std::size_t start = pos_;
    std::uint64_t e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (e > kMaxExponent) fail_at("exponent overflow (limit " + std::to_string(kMaxExponent) + ")", start);
      ++pos_;
    }
    try {
      return base.pow(e);
    } catch (const InputError& ex) {
      fail_at(ex.what(), at);
    }
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->modulus().value();
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + static_cast<unsigned>(s_[pos_++] - '0')) % p;
      return MultiPoly::constant(ring_, static_cast<std::uint32_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      return MultiPoly::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const PolyRingPtr& ring) { return Parser(text, ring).parse(); }

MultiPoly parse_poly(std::string_view text, const RingSpec& ring) { return parse_poly(text, ring.ring()); }

UniPoly parse_uni(std::string_view text, PrimeModulus p, std::string_view var) {
  auto ring = PolyRing::make(p, {{std::string(var), 0}});
  return to_uni(parse_poly(text, ring), 0);
}

}  // namespace frobgrow
