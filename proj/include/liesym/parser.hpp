#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "liesym/poly.hpp"
#include "liesym/toral.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

/// Syntax or name-resolution error at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Parses one polynomial expression over the named variables.
///
/// Grammar (no implicit multiplication, '^' binds tightest):
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' INTEGER)?
///   atom  := INTEGER | NAME | '(' expr ')'
/// Division is only allowed by a nonzero constant, which covers p/q literals.
/// `line` and `column` locate the text inside a larger file for errors.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, int line = 1, int column = 1);

/// A parsed system description: variable list plus named entities in
/// declaration order.
struct SystemFile {
  using Value = std::variant<VectorField, Poly, DiagonalAction>;
  struct Entry {
    std::string name;
    Value value;
    bool operator==(const Entry&) const = default;
  };

  std::vector<std::string> vars;
  std::vector<Entry> entries;

  const Entry* find(std::string_view name) const;
  const VectorField* field(std::string_view name) const;
  const Poly* poly(std::string_view name) const;
  const DiagonalAction* weights(std::string_view name) const;

  bool operator==(const SystemFile&) const = default;
};

/// File layout:
///   vars: x1 x2 x3
///   field NAME:        (one component expression per following line)
///   poly NAME:         (exactly one expression on the following line)
///   weights NAME: q1,q2,...
/// '#' starts a comment; blank lines are ignored.
SystemFile parse_system(std::string_view text);

/// Canonical rendering; parse_system(print_system(s)) == s.
std::string print_system(const SystemFile& system);

}  // namespace liesym
