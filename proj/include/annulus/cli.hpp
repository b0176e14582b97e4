#ifndef ANNULUS_CLI_HPP
#define ANNULUS_CLI_HPP

// Command-line front end. Requires CLI11 on the include path.
//
//   show <target>                 serialized diagram (catalog entries carry
//                                 their shape in the note line)
//   table <family> <from> <to>    TSV rows: n, labels, shape
//   compare [--homeo] <a> <b>     inequivalent | equivalent | inconclusive
//   validate [--strict] <file>    violations, exit 3 if any
//   canon <file>                  canonical key as lowercase hex
//
// A target is a table knot (4_1, 5_1, 5_2, 6_1), a family member
// `family:n` (motto, ll1, ll1v, ll2, e), or a diagram file (`-` = stdin).
// Exit status: 0 success, 2 usage error, 3 bad input file or violations.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "annulus/catalog_io.hpp"
#include "annulus/diagram.hpp"
#include "annulus/families.hpp"

namespace annulus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

namespace detail {

struct Failure {
  int status;
  std::string message;
};

struct FileInput {
  DiagramDocument doc;
  SourceMap map;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kExitInput, path + ": cannot open file"};
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline FileInput load_file(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  FileInput input;
  try {
    input.doc = parse(text, &input.map);
  } catch (const ParseError& e) {
    throw Failure{kExitInput, (path == "-" ? "<stdin>" : path) + ":" +
                                  std::to_string(e.line()) + ":" +
                                  std::to_string(e.column()) + ": error: " +
                                  std::string(errc_name(e.code())) + ": " +
                                  e.detail()};
  }
  return input;
}

struct FamilyRef {
  FamilyId family;
  Int n;
};

inline std::optional<FamilyRef> parse_family_ref(const std::string& target) {
  const auto colon = target.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const auto family = parse_family(std::string_view(target).substr(0, colon));
  if (!family) return std::nullopt;
  const char* first = target.data() + colon + 1;
  const char* last = target.data() + target.size();
  Int n = 0;
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || first == last)
    throw Failure{kExitUsage, "invalid twist parameter in '" + target + "'"};
  return FamilyRef{*family, n};
}

inline Diagram checked_family_diagram(FamilyId f, Int n) {
  try {
    return family_diagram(f, n);
  } catch (const Error& e) {
    throw Failure{kExitUsage, e.what()};
  }
}

/// Resolve a target to a document (name set for catalog and family targets).
inline DiagramDocument resolve(const std::string& target, std::istream& in) {
  if (const auto knot = parse_table_knot(target)) {
    const CatalogEntry entry = base_diagram(*knot);
    auto doc = catalog_document(entry);
    if (!doc)
      throw Failure{kExitInput, target + ": no annulus diagram is recorded (shape " +
                                    std::string(shape_name(entry.shape)) + ")"};
    return *doc;
  }
  if (const auto ref = parse_family_ref(target)) {
    DiagramDocument doc;
    doc.diagram = checked_family_diagram(ref->family, ref->n);
    doc.name = target;
    doc.note = "shape " + std::string(shape_name(shape_of(doc.diagram)));
    return doc;
  }
  return load_file(target, in).doc;
}

inline std::string labels_column(const Diagram& d) {
  std::string out;
  for (const Edge& e : d.edges()) {
    if (!out.empty()) out += ' ';
    out += to_string(e.label);
  }
  return out;
}

inline int show(const std::string& target, std::istream& in, std::ostream& out) {
  if (const auto knot = parse_table_knot(target)) {
    const CatalogEntry entry = base_diagram(*knot);
    if (!entry.diagram) {
      out << entry.name << ": annulus diagram not recorded; shape "
          << shape_name(entry.shape) << "; exterior determines knot: "
          << determination_name(entry.exterior_determines) << "; " << entry.notes
          << "\n";
      return kExitOk;
    }
  }
  out << serialize(resolve(target, in));
  return kExitOk;
}

inline int table(const std::string& family_text, Int from, Int to, std::ostream& out) {
  const auto family = parse_family(family_text);
  if (!family) throw Failure{kExitUsage, "unknown family '" + family_text + "'"};
  if (from > to) throw Failure{kExitUsage, "table range is empty: from > to"};
  for (Int n = from; n <= to; ++n) {
    if (!in_domain(*family, n)) continue;
    const Diagram d = family_diagram(*family, n);
    out << n << '\t' << labels_column(d) << '\t' << shape_name(shape_of(d)) << '\n';
  }
  return kExitOk;
}

inline int compare(const std::string& a, const std::string& b, bool homeo,
                   std::istream& in, std::ostream& out) {
  const Diagram da = resolve(a, in).diagram;
  const Diagram db = resolve(b, in).diagram;
  const Verdict v = homeo ? decide_equivalence(da, db, true) : distinguish(da, db);
  out << verdict_name(v) << '\n';
  return kExitOk;
}

inline int validate(const std::string& path, bool strict, std::istream& in,
                    std::ostream& out) {
  const FileInput input = load_file(path, in);
  const ValidationResult result = validate_diagram(
      input.doc.diagram, strict ? Strictness::Strict : Strictness::Lenient);
  const std::string shown = path == "-" ? "<stdin>" : path;
  auto report = [&](const Violation& v, std::string_view severity) {
    const std::size_t line =
        v.edge ? input.map.edge_lines.at(*v.edge) : input.map.nodes_line;
    out << shown << ':' << line << ": " << severity << ": "
        << violation_name(v.code) << ": " << v.message << '\n';
  };
  for (const Violation& w : result.warnings) report(w, "warning");
  for (const Violation& v : result.violations) report(v, "error");
  if (result.ok()) {
    out << "ok\n";
    return kExitOk;
  }
  return kExitInput;
}

inline int canon(const std::string& path, std::istream& in, std::ostream& out) {
  out << canonical_form(load_file(path, in).doc.diagram).hex() << '\n';
  return kExitOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Annulus diagrams of genus-two handlebody-knots", "annulus"};
  app.require_subcommand(1);

  std::string show_target;
  auto* show_cmd = app.add_subcommand("show", "Print a catalog, family or file diagram");
  show_cmd->add_option("target", show_target, "4_1|5_1|5_2|6_1, family:n, or file")
      ->required();

  std::string family;
  Int from = 0, to = 0;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a twist family over n");
  table_cmd->add_option("family", family, "motto|ll1|ll1v|ll2|e")->required();
  table_cmd->add_option("from", from)->required();
  table_cmd->add_option("to", to)->required();

  std::string lhs, rhs;
  bool homeo = false;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two handlebody-knots");
  compare_cmd->add_flag("--homeo", homeo, "Exteriors are known to be homeomorphic");
  compare_cmd->add_option("a", lhs)->required();
  compare_cmd->add_option("b", rhs)->required();

  std::string validate_path;
  bool strict = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
  validate_cmd->add_option("file", validate_path, "diagram file, - for stdin")->required();
  validate_cmd->add_flag("--strict", strict, "Also require non-integral k2 slopes");

  std::string canon_path;
  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical key of a diagram file");
  canon_cmd->add_option("file", canon_path, "diagram file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*show_cmd) return detail::show(show_target, in, out);
    if (*table_cmd) return detail::table(family, from, to, out);
    if (*compare_cmd) return detail::compare(lhs, rhs, homeo, in, out);
    if (*validate_cmd) return detail::validate(validate_path, strict, in, out);
    if (*canon_cmd) return detail::canon(canon_path, in, out);
  } catch (const detail::Failure& f) {
    err << "annulus: " << f.message << '\n';
    return f.status;
  } catch (const Error& e) {
    err << "annulus: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, std::istream& in = std::cin) {
  std::vector<const char*> argv;
  argv.push_back("annulus");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err, in);
}

}  // namespace annulus::cli

#endif  // ANNULUS_CLI_HPP
