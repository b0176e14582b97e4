#ifndef ANNULUS_ERROR_HPP
#define ANNULUS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace annulus {

enum class Errc {
  ZeroOverZero,
  Overflow,
  NotUnimodular,
  InfiniteSlope,
  DanglingEndpoint,
  TooManyNodes,
  ParameterOutOfDomain,
  ParseError,
  UnsupportedVersion,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroOverZero: return "ZeroOverZero";
    case Errc::Overflow: return "Overflow";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::InfiniteSlope: return "InfiniteSlope";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::TooManyNodes: return "TooManyNodes";
    case Errc::ParameterOutOfDomain: return "ParameterOutOfDomain";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// An error tied to a position in some text input.
///
/// `line` is 1-based, or 0 when the text is a single fragment (a label or a
/// slope) rather than a document. `column` is always 1-based. Construction
/// errors surfaced while reading a document (DanglingEndpoint, TooManyNodes,
/// UnsupportedVersion) are reported through this type too, with `code()`
/// telling them apart.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column,
             std::string message, std::vector<std::string> expected = {})
      : Error(code, format(line, column, message, expected)),
        line_(line),
        column_(column),
        detail_(std::move(message)),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

  /// Re-anchor a fragment error inside a document line.
  ParseError at(std::size_t line, std::size_t column_offset) const {
    return ParseError(code(), line, column_ + column_offset, detail_,
                      expected_);
  }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message,
                            const std::vector<std::string>& expected) {
    std::string out;
    if (line != 0) out += std::to_string(line) + ":";
    out += std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i != 0) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::vector<std::string> expected_;
};

}  // namespace annulus

#endif  // ANNULUS_ERROR_HPP
