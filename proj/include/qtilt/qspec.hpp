#pragma once
// Quivers, path expressions and the line-oriented presentation format.
//
//   field <p>
//   quiver <n>
//   arrow <label> <source> <target>
//   relations
//   <expr>                                  (one relator per line)
//   module <name> cyclic e_<i> / (<expr>)
//
// expr   ::= term (('+'|'-') term)*
// term   ::= [int '*'] factor ('*' factor)*
// factor ::= label | 'e_'int | '(' expr ')' ['^' int]
//
// Vertices are numbered from 1 in the text and from 0 in memory. Words are
// composed left to right: in "b*y" the arrow b is traversed first.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtilt/field.hpp"

namespace qtilt {

struct Arrow {
  std::string label;
  uint32_t source = 0;
  uint32_t target = 0;
};

struct Quiver {
  uint32_t vertices = 0;
  std::vector<Arrow> arrows;  // declaration order is the tie-break of the term order

  /// Arrow index by label, or -1.
  int find(std::string_view label) const;
  /// Underlying undirected graph is connected.
  bool connected() const;
  /// Same vertices, every arrow reversed.
  Quiver opposite() const;
};

/// A path in a quiver. Length-0 paths are the vertex idempotents.
struct Path {
  uint32_t source = 0;
  uint32_t target = 0;
  std::vector<uint16_t> arrows;

  std::size_t length() const { return arrows.size(); }
  static Path vertex(uint32_t v) { return Path{v, v, {}}; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Length-lexicographic order: shorter first, then arrow indices, then source vertex.
struct DegLex {
  bool operator()(const Path& a, const Path& b) const;
};

/// Concatenation a*b; requires a.target == b.source.
Path concat(const Path& a, const Path& b);
Path reversed(const Path& p);
std::string to_string(const Path& p, const Quiver& q);

/// Formal F_p-linear combination of paths, kept canonical: sorted descending
/// in DegLex, no zero coefficients, no repeated paths.
struct PathExpr {
  std::vector<std::pair<uint32_t, Path>> terms;

  bool is_zero() const { return terms.empty(); }
  void canonicalize(const Field& f);
  friend bool operator==(const PathExpr&, const PathExpr&) = default;
};

std::string to_string(const PathExpr& e, const Quiver& q);

struct ModuleDecl {
  std::string name;
  uint32_t vertex = 0;
  PathExpr generator;
  std::string generator_text;
  std::size_t line = 0;
};

struct Presentation {
  Field field{2};
  Quiver quiver;
  std::vector<PathExpr> relations;
  std::vector<ModuleDecl> modules;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

Presentation parse_algebra_spec(std::string_view text);

/// Parses one expression against a quiver. Coefficients are reduced mod p.
/// `line` only labels error locations.
PathExpr parse_element(std::string_view text, const Quiver& q, const Field& f, std::size_t line = 1);

/// Canonical text for a whole presentation; parse_algebra_spec inverts it.
std::string print_presentation(const Presentation& p);

/// FNV-1a 64-bit fingerprint, rendered as 16 hex digits.
std::string fingerprint(std::string_view text);

}  // namespace qtilt
