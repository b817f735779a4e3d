#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fp2/syntax.hpp"

namespace fp2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a program in the concrete syntax:
///
///   head :- lit1, ..., litn.      or      head.
///
/// Negative literals are written `not atom`, comments run from `%` to end
/// of line. List sugar `[]`, `[H|T]`, `[a,b]` desugars to nil/0 and cons/2.
/// `X/V` is the binary functor `/` written infix, `s=t` is the built-in
/// equality literal. Variables start with an uppercase letter or `_`; each
/// bare `_` is a fresh variable.
Program parse_program(std::string_view text);

/// Parses a single atom (used for queries). Rejects `=` and negation.
Atom parse_atom(std::string_view text);

}  // namespace fp2
