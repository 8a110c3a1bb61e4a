#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/enveloping.hpp"
#include "casimir/grading.hpp"
#include "casimir/lie_algebra.hpp"
#include "casimir/weyl.hpp"

namespace casimir {

// Parse or validation failure in user-supplied input. what() is already
// formatted as "file:line: message".
class ParseError : public std::runtime_error {
public:
  ParseError(std::string file, int line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

private:
  std::string file_;
  int line_;
};

// Algebra description:
//   algebra <name>
//   dim <N>
//   basis <id> ... <id>
//   bracket <idA> <idB> = <term> ( (+|-) <term> )*
// with '#' comments, term = [<rational>*]<id>. Unlisted brackets are zero.
// Listing (A,B) and (B,A) is an error unless consistent under antisymmetry.
LieAlgebra parse_algebra(std::istream& in, std::string_view filename);
LieAlgebra parse_algebra_file(const std::string& path);

// Canonical text form; parse_algebra_file round-trips it.
std::string serialize_algebra(const LieAlgebra& a);

// Realisation description:
//   realization <name>
//   vars <id> ...
//   params <id> ...        (optional line; may list nothing)
//   map <gen> = <expr>     one line per generator of `a`
// where <expr> is built from rationals, vars, params, d/d<var>, +, -, *, ^
// and parentheses. Images of derivative order > 1 are rejected.
Realization parse_realization(std::istream& in, std::string_view filename,
                              const LieAlgebra& a);
Realization parse_realization_file(const std::string& path, const LieAlgebra& a);

// Enveloping-algebra expression, e.g. "e2^2 - 2*e1*e3 + 1/2*e4". Factors in
// each term are multiplied left to right and then normal ordered.
UEAElement parse_expression(std::string_view text, const LieAlgebra& a,
                            std::string_view filename = "<expr>", int line = 1);

// Whole-file variant: '#' comments stripped, lines joined.
UEAElement parse_expression_file(const std::string& path, const LieAlgebra& a);

// Canonical rendering, graded-lex descending monomial order;
// parse_expression inverts it.
std::string format_expression(const UEAElement& k, const LieAlgebra& a);

// "(0,2)" or "0,2" -> weight vector.
WeightVector parse_weight_tuple(std::string_view text);
std::string format_weight(const WeightVector& w);

}  // namespace casimir
