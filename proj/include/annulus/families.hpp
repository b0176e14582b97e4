#ifndef ANNULUS_FAMILIES_HPP
#define ANNULUS_FAMILIES_HPP

// Twist families of genus-two handlebody-knots, the table-knot catalog, and
// the (in)equivalence verdicts that annulus diagrams support.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annulus/diagram.hpp"
#include "annulus/error.hpp"
#include "annulus/labels.hpp"
#include "annulus/rational.hpp"

namespace annulus {

enum class FamilyId { Motto, LeeLee1, LeeLee1Variant, LeeLee2, E };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::Motto, FamilyId::LeeLee1,
                                            FamilyId::LeeLee1Variant,
                                            FamilyId::LeeLee2, FamilyId::E};

inline std::string_view family_name(FamilyId f) {
  switch (f) {
    case FamilyId::Motto: return "motto";
    case FamilyId::LeeLee1: return "ll1";
    case FamilyId::LeeLee1Variant: return "ll1v";
    case FamilyId::LeeLee2: return "ll2";
    case FamilyId::E: return "e";
  }
  return "";
}

inline std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

/// Whether n is a legal twist parameter for the family.
inline bool in_domain(FamilyId f, Int n) {
  switch (f) {
    case FamilyId::LeeLee1: return n != 0;
    case FamilyId::LeeLee1Variant: return n != 0 && n != -1;
    default: return true;
  }
}

/// Slope matrices of the families whose twist acts by a unimodular map on a
/// fixed base slope.
inline Unimodular motto_twist(Int n) { return {1, 0, detail::checked_neg(n), 1}; }
inline Unimodular leelee2_twist(Int n) {
  return {1, detail::checked_mul(4, n), 0, 1};
}

/// Annulus diagram of the n-th member of a twist family.
///
/// Layouts: l edges are loops on one node; h2, k1, k2 edges join distinct
/// nodes. Node kinds are Unknown throughout.
///   motto  u -h2- u -k2(2/(1-2n))- u
///   ll1    loop l(1/n, n)                     (n != 0)
///   ll1v   loop l(n/(n+1), (n+1)/n)           (n != 0, -1)
///   ll2    u -k1(4/3 + 4n)- u
///   e      u -h2- u
inline Diagram family_diagram(FamilyId f, Int n) {
  using enum NodeKind;
  if (!in_domain(f, n)) {
    const char* rule = f == FamilyId::LeeLee1 ? "n != 0" : "n not in {0, -1}";
    throw Error(Errc::ParameterOutOfDomain,
                std::string(family_name(f)) + " requires " + rule + ", got n = " +
                    std::to_string(n));
  }
  switch (f) {
    case FamilyId::Motto:
      return Diagram({Unknown, Unknown, Unknown},
                     {{0, 1, H2{}},
                      {1, 2, K2{apply_unimodular(Slope(2), motto_twist(n))}}});
    case FamilyId::LeeLee1:
      return Diagram({Unknown}, {{0, 0, L{SlopePair(Slope(1, n), Slope(n))}}});
    case FamilyId::LeeLee1Variant: {
      const Int m = detail::checked_add(n, 1);
      return Diagram({Unknown}, {{0, 0, L{SlopePair(Slope(n, m), Slope(m, n))}}});
    }
    case FamilyId::LeeLee2:
      return Diagram({Unknown, Unknown},
                     {{0, 1, K1{apply_unimodular(Slope(4, 3), leelee2_twist(n))}}});
    case FamilyId::E:
      return Diagram({Unknown, Unknown}, {{0, 1, H2{}}});
  }
  throw Error(Errc::ParameterOutOfDomain, "unknown family");
}

// ---------------------------------------------------------------------------
// Catalog

enum class TableKnot { HK4_1, HK5_1, HK5_2, HK6_1 };

inline constexpr TableKnot kAllTableKnots[] = {TableKnot::HK4_1, TableKnot::HK5_1,
                                               TableKnot::HK5_2, TableKnot::HK6_1};

inline std::string_view table_knot_name(TableKnot k) {
  switch (k) {
    case TableKnot::HK4_1: return "4_1";
    case TableKnot::HK5_1: return "5_1";
    case TableKnot::HK5_2: return "5_2";
    case TableKnot::HK6_1: return "6_1";
  }
  return "";
}

inline std::optional<TableKnot> parse_table_knot(std::string_view name) {
  for (TableKnot k : kAllTableKnots)
    if (table_knot_name(k) == name) return k;
  return std::nullopt;
}

enum class Determination { Yes, No, Unknown };

inline std::string_view determination_name(Determination d) {
  switch (d) {
    case Determination::Yes: return "yes";
    case Determination::No: return "no";
    case Determination::Unknown: return "unknown";
  }
  return "unknown";
}

struct CatalogEntry {
  std::string name;
  std::optional<Diagram> diagram;
  ShapeClass shape = ShapeClass::Other;
  /// Does the exterior alone determine the handlebody-knot?
  Determination exterior_determines = Determination::Unknown;
  std::string notes;
};

inline CatalogEntry base_diagram(TableKnot k) {
  using enum NodeKind;
  CatalogEntry entry;
  entry.name = std::string(table_knot_name(k));
  switch (k) {
    case TableKnot::HK4_1:
      // The characteristic diagram is a theta; its edge labels are not known.
      entry.shape = ShapeClass::D3_Theta;
      entry.exterior_determines = Determination::Yes;
      entry.notes =
          "any handlebody-knot whose exterior has this characteristic diagram "
          "is equivalent to 4_1";
      break;
    case TableKnot::HK5_1:
      entry.diagram = Diagram({Unknown}, {{0, 0, H1{}}});
      entry.exterior_determines = Determination::Unknown;
      entry.notes = "a single type 2-1 annulus";
      break;
    case TableKnot::HK5_2:
      entry.diagram = family_diagram(FamilyId::LeeLee2, 0);
      entry.exterior_determines = Determination::No;
      entry.notes =
          "ll2 twists share the exterior and carry k1(4/3+4n), so they are "
          "pairwise inequivalent";
      break;
    case TableKnot::HK6_1:
      entry.diagram = family_diagram(FamilyId::Motto, 0);
      entry.exterior_determines = Determination::Yes;
      entry.notes =
          "circle-stick diagram: homeomorphic exteriors imply equivalence";
      break;
  }
  if (entry.diagram) entry.shape = shape_of(*entry.diagram);
  return entry;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class Verdict { Inequivalent, Equivalent, Inconclusive };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

/// The annulus diagram is an invariant: different diagrams separate, equal
/// ones prove nothing.
inline Verdict distinguish(const Diagram& d1, const Diagram& d2) {
  return are_isomorphic(d1, d2) ? Verdict::Inconclusive : Verdict::Inequivalent;
}

/// Circle-stick and theta diagrams, together with homeomorphic exteriors,
/// force equivalence. The circle does not (the e family is a counterexample).
inline Verdict decide_equivalence(const Diagram& d1, const Diagram& d2,
                                  bool exteriors_homeomorphic) {
  if (!are_isomorphic(d1, d2)) return Verdict::Inequivalent;
  if (!exteriors_homeomorphic) return Verdict::Inconclusive;
  const ShapeClass shape = shape_of(d1);
  if (shape == ShapeClass::D2_CircleStick || shape == ShapeClass::D3_Theta)
    return Verdict::Equivalent;
  return Verdict::Inconclusive;
}

/// Crossing number of the constituent knot K_n attached to E_n, n > 0.
/// Recorded data (from a reduced alternating diagram), not computed.
inline Int e_family_crossing_number(Int n) {
  if (n <= 0)
    throw Error(Errc::ParameterOutOfDomain,
                "crossing number is recorded only for n > 0, got n = " +
                    std::to_string(n));
  return detail::checked_add(n, 2);
}

/// The core of the solid torus cut off by the characteristic annulus of the
/// n-th ll2 member is the (2n+1, 2)-torus knot.
inline std::pair<Int, Int> leelee2_companion_torus_knot(Int n) {
  return {detail::checked_add(detail::checked_mul(2, n), 1), 2};
}

}  // namespace annulus

#endif  // ANNULUS_FAMILIES_HPP
