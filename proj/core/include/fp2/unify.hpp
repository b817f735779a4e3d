#pragma once

#include <optional>
#include <set>

#include "fp2/substitution.hpp"
#include "fp2/syntax.hpp"

namespace fp2 {

/// Robinson unification with occurs check. The result, when it exists, is an
/// idempotent most general unifier.
std::optional<Substitution> unify(const Term& a, const Term& b);
std::optional<Substitution> unify(const Atom& a, const Atom& b);

/// Returns a variant of `r` sharing no variable with `avoid`. Every variable
/// is renamed with a counter suffix (X becomes X1, X2, ... picking the first
/// name that clashes with neither `avoid` nor the rule's own variables).
Rule standardize_apart(const Rule& r, const std::set<std::string>& avoid);

}  // namespace fp2
