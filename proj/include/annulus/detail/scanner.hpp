#ifndef ANNULUS_DETAIL_SCANNER_HPP
#define ANNULUS_DETAIL_SCANNER_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "annulus/error.hpp"

namespace annulus::detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Cursor over a single text fragment. Positions reported in errors are
// 1-based columns into the fragment.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }

  // Peek at the next non-space character ('\0' at end).
  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  // Maximal run of [a-z0-9] (possibly empty).
  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && (is_digit(text_[pos_]) ||
                         (text_[pos_] >= 'a' && text_[pos_] <= 'z')))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Unsigned decimal literal with overflow detection.
  std::int64_t unsigned_integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !is_digit(text_[pos_])) fail({"integer"});
    std::int64_t value = 0;
    while (!at_end() && is_digit(text_[pos_])) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw ParseError(Errc::Overflow, 0, start + 1,
                         "integer literal out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail({"end of input"});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found =
        at_end() ? "end of input"
                 : std::string("'") + text_[pos_] + "'";
    throw ParseError(Errc::ParseError, 0, pos_ + 1, "unexpected " + found,
                     std::move(expected));
  }

  [[noreturn]] void fail_at(std::size_t pos, Errc code,
                            const std::string& message) {
    throw ParseError(code, 0, pos + 1, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace annulus::detail

#endif  // ANNULUS_DETAIL_SCANNER_HPP
