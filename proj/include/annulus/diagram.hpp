#ifndef ANNULUS_DIAGRAM_HPP
#define ANNULUS_DIAGRAM_HPP

// Annulus diagrams: labeled multigraphs whose nodes are the complementary
// pieces of the characteristic annuli and whose edges are those annuli.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "annulus/error.hpp"
#include "annulus/labels.hpp"

namespace annulus {

/// Solid nodes are admissibly fibered pieces, hollow nodes are simple ones.
enum class NodeKind : std::uint8_t { Fibered, Simple, Unknown };

inline char node_kind_char(NodeKind kind) {
  switch (kind) {
    case NodeKind::Fibered: return 's';
    case NodeKind::Simple: return 'h';
    case NodeKind::Unknown: return 'u';
  }
  return 'u';
}

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  AnnulusLabel label;

  bool is_loop() const noexcept { return a == b; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr std::size_t kMaxNodes = 16;

class Diagram {
 public:
  Diagram() = default;

  /// Stores nodes and edges verbatim. Throws DanglingEndpoint if an edge
  /// refers to a missing node and TooManyNodes above kMaxNodes.
  Diagram(std::vector<NodeKind> nodes, std::vector<Edge> edges)
      : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    if (nodes_.size() > kMaxNodes)
      throw Error(Errc::TooManyNodes,
                  "diagram has " + std::to_string(nodes_.size()) +
                      " nodes, at most " + std::to_string(kMaxNodes) +
                      " are supported");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.a >= nodes_.size() || e.b >= nodes_.size())
        throw Error(Errc::DanglingEndpoint,
                    "edge " + std::to_string(i) + " (" + std::to_string(e.a) +
                        ", " + std::to_string(e.b) + ") refers to a node outside 0.." +
                        (nodes_.empty() ? std::string("(none)")
                                        : std::to_string(nodes_.size() - 1)));
    }
  }

  const std::vector<NodeKind>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<NodeKind> nodes_;
  std::vector<Edge> edges_;
};

inline Diagram diagram_new(std::vector<NodeKind> nodes, std::vector<Edge> edges) {
  return Diagram(std::move(nodes), std::move(edges));
}

// ---------------------------------------------------------------------------
// Shapes

enum class ShapeClass { D1_Circle, D2_CircleStick, D3_Theta, Stick, Other };

inline std::string_view shape_name(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::D1_Circle: return "circle";
    case ShapeClass::D2_CircleStick: return "circle-stick";
    case ShapeClass::D3_Theta: return "theta";
    case ShapeClass::Stick: return "stick";
    case ShapeClass::Other: return "other";
  }
  return "other";
}

/// The circle, circle-stick and theta shapes are recognized by their label
/// multisets ({h2}, {h2, k_i(r)}, {l(r,s), h2, h2}); only the stick uses the
/// graph itself (two nodes joined by one edge). Label rules take precedence.
inline ShapeClass shape_of(const Diagram& d) {
  std::size_t count[std::variant_size_v<AnnulusLabel>] = {};
  for (const Edge& e : d.edges()) ++count[e.label.index()];
  const std::size_t h2 = count[1], k1 = count[2], k2 = count[3], l = count[4];
  const std::size_t m = d.edge_count();

  if (m == 1 && h2 == 1) return ShapeClass::D1_Circle;
  if (m == 2 && h2 == 1 && (k1 == 1 || k2 == 1))
    return ShapeClass::D2_CircleStick;
  if (m == 3 && h2 == 2 && l == 1) return ShapeClass::D3_Theta;
  if (d.node_count() == 2 && m == 1 && !d.edges().front().is_loop())
    return ShapeClass::Stick;
  return ShapeClass::Other;
}

// ---------------------------------------------------------------------------
// Validation

/// Checks every label, then two global rules:
///  - an em edge excludes any non-separating (l) edge;
///  - a stick diagram must carry a single k1(r) with r finite, non-integral.
inline ValidationResult validate_diagram(const Diagram& d, Strictness strictness) {
  ValidationResult result;
  for (std::size_t i = 0; i < d.edge_count(); ++i) {
    ValidationResult r = validate_label(d.edges()[i].label, strictness);
    for (auto& v : r.violations) v.edge = i;
    for (auto& w : r.warnings) w.edge = i;
    result.append(std::move(r));
  }

  const auto& edges = d.edges();
  const bool has_em = std::any_of(edges.begin(), edges.end(), [](const Edge& e) {
    return std::holds_alternative<EM>(e.label);
  });
  if (has_em) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (separation_class(edges[i].label) == SeparationClass::NonSeparating)
        result.violations.push_back(
            {ViolationCode::EmWithNonSeparating,
             "non-separating " + to_string(edges[i].label) +
                 " edge cannot coexist with an em edge",
             i});
    }
  }

  if (shape_of(d) == ShapeClass::Stick) {
    const auto* k1 = std::get_if<K1>(&edges.front().label);
    if (k1 == nullptr || k1->slope.is_infinite() || k1->slope.is_integral())
      result.violations.push_back(
          {ViolationCode::StickMustBeK1,
           "stick diagram edge must be k1(r) with r non-integral, found " +
               to_string(edges.front().label),
           0});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Canonical form

/// Opaque canonical encoding; equal exactly for isomorphic diagrams.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xf]);
    }
    return out;
  }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

// Minimizes, over node permutations, the pair
//   (permuted node-kind vector, sorted list of (min end, max end, label text))
// by exhaustive search with three exact prunings:
//  * the kind vector is compared first, so new index k may only be given to a
//    node of the k-th smallest kind;
//  * twin nodes (whose transposition is an automorphism) are interchangeable,
//    so only one per twin class is tried at each level;
//  * partial assignments whose determined prefix already loses to the best
//    complete encoding are cut.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Diagram& d) : n_(d.node_count()) {
    std::copy(d.nodes().begin(), d.nodes().end(), kinds_.begin());
    std::vector<std::string> texts;
    texts.reserve(d.edge_count());
    for (const Edge& e : d.edges()) texts.push_back(to_string(e.label));
    label_texts_ = texts;
    std::sort(label_texts_.begin(), label_texts_.end());
    label_texts_.erase(std::unique(label_texts_.begin(), label_texts_.end()),
                       label_texts_.end());
    edges_.reserve(d.edge_count());
    for (std::size_t i = 0; i < d.edge_count(); ++i) {
      const Edge& e = d.edges()[i];
      const auto rank = static_cast<std::size_t>(
          std::lower_bound(label_texts_.begin(), label_texts_.end(), texts[i]) -
          label_texts_.begin());
      edges_.push_back({e.a, e.b, rank});
    }
    target_kinds_ = kinds_;
    std::sort(target_kinds_.begin(), target_kinds_.begin() + n_);
    scratch_.reserve(edges_.size());
    best_.reserve(edges_.size());
    compute_twins();
  }

  CanonicalKey run() {
    new_of_.fill(kUnassigned);
    have_best_ = false;
    search(0);

    CanonicalKey key;
    for (std::size_t i = 0; i < n_; ++i) key.bytes.push_back(node_kind_char(target_kinds_[i]));
    key.bytes.push_back('|');
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (i != 0) key.bytes.push_back(';');
      key.bytes += std::to_string(best_[i].lo);
      key.bytes.push_back(' ');
      key.bytes += std::to_string(best_[i].hi);
      key.bytes.push_back(' ');
      key.bytes += label_texts_[best_[i].rank];
    }
    return key;
  }

 private:
  static constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  using NodeMap = std::array<std::size_t, kMaxNodes>;

  struct Triple {
    std::size_t lo, hi, rank;
    friend auto operator<=>(const Triple&, const Triple&) = default;
  };
  struct RawEdge {
    std::size_t a, b, rank;
  };

  // Sorted triples of the diagram relabeled by `map`, written to `out`.
  void relabel(const NodeMap& map, std::vector<Triple>& out) const {
    out.clear();
    for (const RawEdge& e : edges_) {
      const std::size_t x = map[e.a], y = map[e.b];
      out.push_back({std::min(x, y), std::max(x, y), e.rank});
    }
    std::sort(out.begin(), out.end());
  }

  void compute_twins() {
    NodeMap identity{};
    for (std::size_t i = 0; i < n_; ++i) identity[i] = twin_class_[i] = i;
    if (n_ < 2) return;
    std::vector<Triple>& original = best_;
    std::vector<Triple>& swapped = scratch_;
    relabel(identity, original);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u = 0; u < v; ++u) {
        if (twin_class_[u] != u || kinds_[u] != kinds_[v]) continue;
        NodeMap swap = identity;
        std::swap(swap[u], swap[v]);
        relabel(swap, swapped);
        if (swapped == original) {
          twin_class_[v] = u;
          break;
        }
      }
    }
    best_.clear();
  }

  void search(std::size_t k) {
    if (k == n_) {
      relabel(new_of_, scratch_);
      if (!have_best_ || scratch_ < best_) {
        best_.swap(scratch_);
        have_best_ = true;
      }
      return;
    }
    std::uint32_t tried = 0;  // bit c set: twin class c already tried
    for (std::size_t x = 0; x < n_; ++x) {
      if (new_of_[x] != kUnassigned || kinds_[x] != target_kinds_[k]) continue;
      const std::uint32_t bit = std::uint32_t{1} << twin_class_[x];
      if (tried & bit) continue;
      tried |= bit;
      new_of_[x] = k;
      if (k + 1 == n_ || !have_best_ || !dominated(k + 1)) search(k + 1);
      new_of_[x] = kUnassigned;
    }
  }

  // True when every completion of the current assignment of new indices
  // 0..assigned-1 encodes strictly greater than best_.
  bool dominated(std::size_t assigned) {
    scratch_.clear();
    std::uint32_t partial = 0;
    for (const RawEdge& e : edges_) {
      const std::size_t x = new_of_[e.a], y = new_of_[e.b];
      if (x != kUnassigned && y != kUnassigned) {
        scratch_.push_back({std::min(x, y), std::max(x, y), e.rank});
      } else if (x != kUnassigned) {
        partial |= std::uint32_t{1} << x;
      } else if (y != kUnassigned) {
        partial |= std::uint32_t{1} << y;
      }
    }
    std::sort(scratch_.begin(), scratch_.end());
    // Known triples come grouped by their smaller end; the determined prefix
    // stops after the first group whose node still has an unassigned
    // neighbour, because those edges sort after the group's known ones.
    std::size_t pos = 0;
    for (std::size_t i = 0; i < assigned; ++i) {
      for (; pos < scratch_.size() && scratch_[pos].lo == i; ++pos) {
        if (scratch_[pos] != best_[pos]) return scratch_[pos] > best_[pos];
      }
      if (partial & (std::uint32_t{1} << i))
        return best_[pos] < Triple{i, assigned, 0};
    }
    return pos < best_.size() && best_[pos] < Triple{assigned, assigned, 0};
  }

  std::size_t n_;
  std::array<NodeKind, kMaxNodes> kinds_{};
  std::array<NodeKind, kMaxNodes> target_kinds_{};
  std::vector<std::string> label_texts_;
  std::vector<RawEdge> edges_;
  NodeMap twin_class_{};

  NodeMap new_of_{};
  std::vector<Triple> scratch_;
  std::vector<Triple> best_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalKey canonical_form(const Diagram& d) {
  if (d.node_count() > kMaxNodes)
    throw Error(Errc::TooManyNodes, "diagram exceeds the canonicalization bound");
  return detail::Canonicalizer(d).run();
}

inline bool are_isomorphic(const Diagram& d1, const Diagram& d2) {
  if (d1.node_count() != d2.node_count() || d1.edge_count() != d2.edge_count())
    return false;
  return canonical_form(d1) == canonical_form(d2);
}

}  // namespace annulus

#endif  // ANNULUS_DIAGRAM_HPP
