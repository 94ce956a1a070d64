#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "su3/errors.hpp"
#include "su3/scalar.hpp"

namespace su3::detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume(std::string_view lit) {
    skip_ws();
    if (text.substr(pos, lit.size()) == lit) {
      pos += lit.size();
      return true;
    }
    return false;
  }
  bool looking_at(std::string_view lit) {
    skip_ws();
    return text.substr(pos, lit.size()) == lit;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" +
                     std::string(text) + "'");
  }
};

/// One unsigned surd term (or decimal literal), without a leading sign.
Scalar parse_scalar_term(Cursor& cur);
/// Signed sum of terms; stops before anything that is not a term continuation.
Scalar parse_scalar_sum(Cursor& cur);

}  // namespace su3::detail
