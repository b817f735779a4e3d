#pragma once

#include <string>

#include "fp2/syntax.hpp"

namespace fp2 {

/// A symbol whose occurrences can be counted: a variable or a function
/// symbol (identified by name and arity).
struct Symbol {
  enum class Kind { variable, function };
  Kind kind = Kind::variable;
  std::string name;
  int arity = 0;

  static Symbol var(std::string name) {
    return Symbol{Kind::variable, std::move(name), 0};
  }
  static Symbol fun(std::string name, int arity) {
    return Symbol{Kind::function, std::move(name), arity};
  }
};

/// The term-size norm: number of variable occurrences plus function-symbol
/// occurrences, constants counted as functions. Extends additively to
/// sequences; the empty sequence has norm 0.
int norm(const Term& t);
int norm(const TermVec& ts);

/// Exact number of occurrences of `s`.
int nocc(const Symbol& s, const Term& t);
int nocc(const Symbol& s, const TermVec& ts);

/// The three size-comparison relations over all grounding substitutions,
/// decided by variable-occurrence counting:
///   strict_less         |t sigma| <  |u sigma| for every grounding sigma
///   less_eq             |t sigma| <= |u sigma| for every grounding sigma
///   almost_never_larger |t sigma| >  |u sigma| for at most finitely many
/// Grounding substitutions range over vars(t) + vars(u).
struct CompareResult {
  bool strict_less = false;
  bool less_eq = false;
  bool almost_never_larger = false;
};

CompareResult compare(const TermVec& t, const TermVec& u);

}  // namespace fp2
