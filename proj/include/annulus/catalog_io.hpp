#ifndef ANNULUS_CATALOG_IO_HPP
#define ANNULUS_CATALOG_IO_HPP

// Line-oriented text format for annulus diagrams:
//
//   annulusdiagram v1
//   nodes: u u
//   edge: 0 1 k1(4/3)
//   name: 5_2
//   note: free text
//
// Node kinds are `s` (fibered), `h` (simple) and `u` (unknown). Edges,
// name and note are optional; name and note follow the edges and appear at
// most once each. Trailing whitespace and blank lines are ignored.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annulus/detail/scanner.hpp"
#include "annulus/diagram.hpp"
#include "annulus/error.hpp"
#include "annulus/families.hpp"
#include "annulus/labels.hpp"

namespace annulus {

inline constexpr int kFormatVersion = 1;

struct DiagramDocument {
  int version = kFormatVersion;
  Diagram diagram;
  std::optional<std::string> name;
  std::optional<std::string> note;

  friend bool operator==(const DiagramDocument&, const DiagramDocument&) = default;
};

/// Where things came from in the parsed text (1-based line numbers).
struct SourceMap {
  std::size_t nodes_line = 0;
  std::vector<std::size_t> edge_lines;
};

namespace detail {

inline std::string single_line(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == '\n' || c == '\r') c = ' ';
  return out;
}

inline std::string_view rstrip(std::string_view s) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

inline std::optional<NodeKind> node_kind_from_char(char c) {
  switch (c) {
    case 's': return NodeKind::Fibered;
    case 'h': return NodeKind::Simple;
    case 'u': return NodeKind::Unknown;
    default: return std::nullopt;
  }
}

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  DiagramDocument run(SourceMap* map) {
    enum class Stage { Header, Nodes, Edges, Metadata };
    Stage stage = Stage::Header;
    std::vector<NodeKind> nodes;
    std::vector<Edge> edges;
    DiagramDocument doc;
    SourceMap local;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      const std::string_view line = rstrip(text_.substr(start, end - start));
      start = end + 1;
      ++line_no;
      line_ = line_no;
      if (line.empty()) continue;

      switch (stage) {
        case Stage::Header:
          header(line);
          stage = Stage::Nodes;
          break;
        case Stage::Nodes:
          if (!starts_with(line, "nodes:")) fail(1, "missing nodes line", {"nodes:"});
          nodes = node_list(line);
          local.nodes_line = line_no;
          stage = Stage::Edges;
          break;
        case Stage::Edges:
          if (starts_with(line, "edge:")) {
            edges.push_back(edge(line, nodes.size()));
            local.edge_lines.push_back(line_no);
            break;
          }
          stage = Stage::Metadata;
          [[fallthrough]];
        case Stage::Metadata:
          if (starts_with(line, "name:")) {
            if (doc.name) fail(1, "duplicate name line");
            doc.name = metadata_value(line, "name:");
          } else if (starts_with(line, "note:")) {
            if (doc.note) fail(1, "duplicate note line");
            doc.note = metadata_value(line, "note:");
          } else if (starts_with(line, "edge:")) {
            fail(1, "edge lines must precede name and note");
          } else {
            fail(1, "unrecognized line", {"edge:", "name:", "note:"});
          }
          break;
      }
    }
    line_ = line_no;
    if (stage == Stage::Header)
      fail(1, "empty document", {"annulusdiagram v1"});
    if (stage == Stage::Nodes) fail(1, "missing nodes line", {"nodes:"});

    doc.diagram = Diagram(std::move(nodes), std::move(edges));
    if (map) *map = std::move(local);
    return doc;
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& message,
                         std::vector<std::string> expected = {},
                         Errc code = Errc::ParseError) const {
    throw ParseError(code, line_, column, message, std::move(expected));
  }

  void header(std::string_view line) const {
    static constexpr std::string_view kMagic = "annulusdiagram v";
    if (!starts_with(line, kMagic)) fail(1, "missing header", {"annulusdiagram v1"});
    const std::string_view version = line.substr(kMagic.size());
    if (version == "1") return;
    bool numeric = !version.empty();
    for (char c : version) numeric = numeric && is_digit(c);
    if (numeric)
      fail(kMagic.size() + 1, "unsupported format version " + std::string(version),
           {"1"}, Errc::UnsupportedVersion);
    fail(kMagic.size() + 1, "malformed format version", {"1"});
  }

  std::vector<NodeKind> node_list(std::string_view line) const {
    std::vector<NodeKind> nodes;
    std::size_t pos = 6;  // past "nodes:"
    while (pos < line.size()) {
      if (line[pos] != ' ') fail(pos + 1, "expected a single space", {"' '"});
      ++pos;
      if (pos >= line.size()) break;
      const auto kind = node_kind_from_char(line[pos]);
      if (!kind) fail(pos + 1, "unknown node kind", {"s", "h", "u"});
      nodes.push_back(*kind);
      ++pos;
      if (nodes.size() > kMaxNodes)
        fail(pos, "more than " + std::to_string(kMaxNodes) + " nodes", {},
             Errc::TooManyNodes);
    }
    return nodes;
  }

  std::size_t index(std::string_view line, std::size_t& pos,
                    std::size_t node_count) const {
    const std::size_t begin = pos;
    if (pos >= line.size() || !is_digit(line[pos])) fail(pos + 1, "expected node index", {"integer"});
    std::size_t value = 0;
    while (pos < line.size() && is_digit(line[pos])) {
      value = value * 10 + static_cast<std::size_t>(line[pos] - '0');
      if (value > kMaxNodes * 10) fail(begin + 1, "node index out of range", {}, Errc::DanglingEndpoint);
      ++pos;
    }
    if (value >= node_count)
      fail(begin + 1,
           "edge endpoint " + std::to_string(value) + " does not name a node (" +
               std::to_string(node_count) + " declared)",
           {}, Errc::DanglingEndpoint);
    return value;
  }

  Edge edge(std::string_view line, std::size_t node_count) const {
    std::size_t pos = 5;  // past "edge:"
    auto space = [&] {
      if (pos >= line.size() || line[pos] != ' ') fail(pos + 1, "expected a single space", {"' '"});
      ++pos;
    };
    space();
    const std::size_t a = index(line, pos, node_count);
    space();
    const std::size_t b = index(line, pos, node_count);
    space();
    try {
      return Edge{a, b, label_from_text(line.substr(pos))};
    } catch (const ParseError& e) {
      throw e.at(line_, pos);
    } catch (const Error& e) {
      fail(pos + 1, e.what(), {}, e.code());
    }
  }

  std::string metadata_value(std::string_view line, std::string_view key) const {
    std::string_view rest = line.substr(key.size());
    if (rest.empty()) return {};
    if (rest.front() != ' ') fail(key.size() + 1, "expected a single space", {"' '"});
    return std::string(rest.substr(1));
  }

  std::string_view text_;
  std::size_t line_ = 0;
};

}  // namespace detail

inline std::string serialize(const DiagramDocument& doc) {
  std::string out = "annulusdiagram v" + std::to_string(doc.version) + "\nnodes:";
  for (NodeKind k : doc.diagram.nodes()) {
    out += ' ';
    out += node_kind_char(k);
  }
  out += '\n';
  for (const Edge& e : doc.diagram.edges()) {
    out += "edge: " + std::to_string(e.a) + " " + std::to_string(e.b) + " " +
           to_string(e.label) + "\n";
  }
  if (doc.name) out += "name: " + detail::single_line(*doc.name) + "\n";
  if (doc.note) out += "note: " + detail::single_line(*doc.note) + "\n";
  return out;
}

inline std::string serialize(const Diagram& d) {
  return serialize(DiagramDocument{kFormatVersion, d, std::nullopt, std::nullopt});
}

/// Parse a document. Throws ParseError whose code() is ParseError,
/// UnsupportedVersion, DanglingEndpoint, TooManyNodes, ZeroOverZero or
/// Overflow; line() and column() locate the problem.
inline DiagramDocument parse(std::string_view text, SourceMap* map = nullptr) {
  return detail::DocumentParser(text).run(map);
}

/// Document form of a catalog entry, or nothing if its diagram is unknown.
inline std::optional<DiagramDocument> catalog_document(const CatalogEntry& entry) {
  if (!entry.diagram) return std::nullopt;
  DiagramDocument doc;
  doc.diagram = *entry.diagram;
  doc.name = entry.name;
  doc.note = "shape " + std::string(shape_name(entry.shape)) +
             "; exterior determines knot: " +
             std::string(determination_name(entry.exterior_determines)) + "; " +
             entry.notes;
  return doc;
}

}  // namespace annulus

#endif  // ANNULUS_CATALOG_IO_HPP
