#ifndef ANNULUS_LABELS_HPP
#define ANNULUS_LABELS_HPP

// Edge labels of annulus diagrams: the six essential-annulus types, their
// validity rules, and the `h1 | h2 | em | k1(r) | k2(r) | l(r,s) | l(?)`
// text grammar.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "annulus/detail/scanner.hpp"
#include "annulus/error.hpp"
#include "annulus/rational.hpp"

namespace annulus {

struct H1 {
  friend bool operator==(const H1&, const H1&) = default;
};
struct H2 {
  friend bool operator==(const H2&, const H2&) = default;
};
struct K1 {
  Slope slope;
  friend bool operator==(const K1&, const K1&) = default;
};
struct K2 {
  Slope slope;
  friend bool operator==(const K2&, const K2&) = default;
};
/// Type 3-3 annulus. An absent pair stands for "slope pair not known".
struct L {
  std::optional<SlopePair> pair;
  friend bool operator==(const L&, const L&) = default;
};
struct EM {
  friend bool operator==(const EM&, const EM&) = default;
};

using AnnulusLabel = std::variant<H1, H2, K1, K2, L, EM>;

enum class SeparationClass { Separating, NonSeparating, Unknown };

enum class Strictness { Strict, Lenient };

enum class ViolationCode {
  InfiniteSlope,
  NonIntegralRequired,
  SlopePairFormInvalid,
  SlopePairMissing,
  EmWithNonSeparating,
  StickMustBeK1,
};

inline std::string_view violation_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::InfiniteSlope: return "InfiniteSlope";
    case ViolationCode::NonIntegralRequired: return "NonIntegralRequired";
    case ViolationCode::SlopePairFormInvalid: return "SlopePairFormInvalid";
    case ViolationCode::SlopePairMissing: return "SlopePairMissing";
    case ViolationCode::EmWithNonSeparating: return "EmWithNonSeparating";
    case ViolationCode::StickMustBeK1: return "StickMustBeK1";
  }
  return "Unknown";
}

struct Violation {
  ViolationCode code;
  std::string message;
  /// Index of the offending edge when checked as part of a diagram.
  std::optional<std::size_t> edge;
};

struct ValidationResult {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;

  bool ok() const noexcept { return violations.empty(); }

  void append(ValidationResult other) {
    for (auto& v : other.violations) violations.push_back(std::move(v));
    for (auto& w : other.warnings) warnings.push_back(std::move(w));
  }
};

inline std::string_view label_tag(const AnnulusLabel& label) {
  static constexpr std::string_view tags[] = {"h1", "h2", "k1",
                                              "k2", "l",  "em"};
  return tags[label.index()];
}

inline std::string to_string(const AnnulusLabel& label) {
  struct Printer {
    std::string operator()(const H1&) const { return "h1"; }
    std::string operator()(const H2&) const { return "h2"; }
    std::string operator()(const EM&) const { return "em"; }
    std::string operator()(const K1& k) const {
      return "k1(" + to_string(k.slope) + ")";
    }
    std::string operator()(const K2& k) const {
      return "k2(" + to_string(k.slope) + ")";
    }
    std::string operator()(const L& l) const {
      if (!l.pair) return "l(?)";
      return "l(" + to_string(l.pair->first()) + "," +
             to_string(l.pair->second()) + ")";
    }
  };
  return std::visit(Printer{}, label);
}

inline std::string label_to_text(const AnnulusLabel& label) {
  return to_string(label);
}

namespace detail {

inline AnnulusLabel scan_label(Scanner& in) {
  in.skip_ws();
  const std::size_t start = in.pos();
  const std::string_view tag = in.word();
  auto slope_arg = [&]() {
    in.expect('(');
    Slope s = scan_slope(in);
    in.expect(')');
    return s;
  };
  if (tag == "h1") return H1{};
  if (tag == "h2") return H2{};
  if (tag == "em") return EM{};
  if (tag == "k1") return K1{slope_arg()};
  if (tag == "k2") return K2{slope_arg()};
  if (tag == "l") {
    in.expect('(');
    if (in.accept('?')) {
      in.expect(')');
      return L{};
    }
    const Slope a = scan_slope(in);
    in.expect(',');
    const Slope b = scan_slope(in);
    in.expect(')');
    return L{SlopePair(a, b)};
  }
  std::string found = tag.empty() ? "" : " '" + std::string(tag) + "'";
  throw ParseError(Errc::ParseError, 0, start + 1,
                   "unknown annulus type" + found,
                   {"h1", "h2", "em", "k1", "k2", "l"});
}

}  // namespace detail

/// Parse one label; the whole string must be consumed.
inline AnnulusLabel label_from_text(std::string_view text) {
  detail::Scanner in(text);
  AnnulusLabel label = detail::scan_label(in);
  in.expect_end();
  return label;
}

inline SeparationClass separation_class(const AnnulusLabel& label) {
  if (std::holds_alternative<L>(label)) return SeparationClass::NonSeparating;
  if (std::holds_alternative<H1>(label) || std::holds_alternative<H2>(label))
    return SeparationClass::Unknown;
  return SeparationClass::Separating;
}

/// K1 slopes must be finite and non-integral in every mode. K2 slopes must
/// be finite; non-integrality is enforced only under Strict, since a type
/// 3-2ii annulus with integral slope does occur in computed diagrams.
inline ValidationResult validate_label(const AnnulusLabel& label,
                                       Strictness strictness) {
  ValidationResult result;
  auto violation = [&](ViolationCode code, std::string message) {
    result.violations.push_back({code, std::move(message), std::nullopt});
  };
  auto check_slope = [&](const Slope& s, bool require_non_integral) {
    if (s.is_infinite()) {
      violation(ViolationCode::InfiniteSlope,
                std::string(label_tag(label)) + " slope must be finite");
    } else if (require_non_integral && s.is_integral()) {
      violation(ViolationCode::NonIntegralRequired,
                std::string(label_tag(label)) + " slope " + to_string(s) +
                    " must be non-integral");
    }
  };

  if (const auto* k1 = std::get_if<K1>(&label)) {
    check_slope(k1->slope, true);
  } else if (const auto* k2 = std::get_if<K2>(&label)) {
    check_slope(k2->slope, strictness == Strictness::Strict);
  } else if (const auto* l = std::get_if<L>(&label)) {
    if (!l->pair) {
      result.warnings.push_back({ViolationCode::SlopePairMissing,
                                 "l slope pair is not recorded", std::nullopt});
    } else if (l->pair->first().is_infinite() ||
               l->pair->second().is_infinite()) {
      violation(ViolationCode::InfiniteSlope, "l slope pair must be finite");
    } else if (pair_form(*l->pair) == FormClass::Invalid) {
      violation(ViolationCode::SlopePairFormInvalid,
                "slope pair " + to_string(*l->pair) +
                    " is neither of the form (p/q,q/p) nor (p/q,pq)");
    }
  }
  return result;
}

}  // namespace annulus

#endif  // ANNULUS_LABELS_HPP
