#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "liedeg/lie_algebra.hpp"

namespace liedeg {

/// Parse failure with 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

struct ParsedAlgebra {
  LieAlgebra algebra;
  std::optional<int> expected_orbit_dim;
  std::string family;
};

/// Catalog text format. Statements are separated by newlines or ';'.
///   name <ident>          (optional)
///   dim <n>               (required, before brackets)
///   orbit <d>             (optional)
///   family <text>         (optional)
///   [<i>,<j>] = <c>*e<k> + <c>*e<k> ...   with integer or p/q coefficients
/// '#' starts a comment. Brackets with i > j are normalized; [i,i] is an
/// error, as are out-of-range indices and duplicate pairs.
ParsedAlgebra parse_algebra_full(std::string_view text);

LieAlgebra parse_algebra(std::string_view text);

/// Render in the catalog format; parse_algebra(render(a)) == a.
std::string render(const LieAlgebra& a);

/// Parse a rational matrix block: n rows of n whitespace-separated rationals.
Mat parse_matrix_rows(const std::vector<std::string>& rows, std::size_t n);

}  // namespace liedeg
