#pragma once

// Minimal cursor over serialized text; shared by the symcore and coeffring
// parsers.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "wg/errors.hpp"

namespace wg::detail {

class TextScanner {
 public:
  TextScanner(std::string_view text, const char* what) : text_(text), what_(what) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  // Unsigned decimal digits as a string (no sign).
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  int integer() {
    bool neg = accept('-');
    std::string d = digits();
    if (d.size() > 9) fail("integer too large");
    int v = std::stoi(d);
    return neg ? -v : v;
  }
  std::vector<int> int_list(char open, char close) {
    std::vector<int> out;
    expect(open);
    if (accept(close)) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(close);
    return out;
  }
  void finish() {
    if (!done()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError(std::string("cannot parse ") + what_ + " '" + std::string(text_) +
                      "': " + msg);
  }

 private:
  std::string_view text_;
  const char* what_;
  std::size_t pos_ = 0;
};

}  // namespace wg::detail
