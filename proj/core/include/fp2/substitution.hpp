#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "fp2/syntax.hpp"

namespace fp2 {

/// An idempotent substitution: a finite map from variable names to terms in
/// which no bound variable occurs in any image. The empty map is the
/// identity.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  /// The image of `var`, or nullptr if unbound.
  const Term* lookup(const std::string& var) const;

  /// Composes this substitution with {var -> value}: existing images are
  /// rewritten, then the new binding is added. `value` must not contain
  /// `var` (occurs check is the caller's responsibility).
  void bind(const std::string& var, const Term& value);

  Substitution restricted_to(const std::set<std::string>& vars) const;

  friend auto operator<=>(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Term> bindings_;
};

Term apply(const Substitution& s, const Term& t);
TermVec apply(const Substitution& s, const TermVec& ts);
Atom apply(const Substitution& s, const Atom& a);
Literal apply(const Substitution& s, const Literal& l);
Rule apply(const Substitution& s, const Rule& r);

/// compose(f, g) applies f first, then g.
Substitution compose(const Substitution& first, const Substitution& then);

/// One-way matching: a substitution s with apply(s, pattern) == instance,
/// binding only pattern variables. Fails when none exists.
std::optional<Substitution> match(const Term& pattern, const Term& instance);
std::optional<Substitution> match(const Atom& pattern, const Atom& instance);

std::string to_string(const Substitution& s);

}  // namespace fp2
