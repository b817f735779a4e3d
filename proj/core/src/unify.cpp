#include "fp2/unify.hpp"

#include <map>

namespace fp2 {

namespace {

bool occurs(const std::string& var, const Term& t) {
  if (t.is_variable()) return t.name() == var;
  for (const Term& a : t.args())
    if (occurs(var, a)) return true;
  return false;
}

bool unify_into(const Term& a0, const Term& b0, Substitution& s) {
  Term a = apply(s, a0);
  Term b = apply(s, b0);
  if (a.is_variable()) {
    if (b.is_variable() && b.name() == a.name()) return true;
    if (occurs(a.name(), b)) return false;
    s.bind(a.name(), b);
    return true;
  }
  if (b.is_variable()) {
    if (occurs(b.name(), a)) return false;
    s.bind(b.name(), a);
    return true;
  }
  if (a.name() != b.name() || a.arity() != b.arity()) return false;
  for (int i = 0; i < a.arity(); ++i)
    if (!unify_into(a.args()[i], b.args()[i], s)) return false;
  return true;
}

void collect_ordered_vars(const Term& t, std::vector<std::string>& order,
                          std::set<std::string>& seen) {
  if (t.is_variable()) {
    if (seen.insert(t.name()).second) order.push_back(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_ordered_vars(a, order, seen);
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution s;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.arity() != b.arity())
    return std::nullopt;
  Substitution s;
  for (int i = 0; i < a.arity(); ++i)
    if (!unify_into(a.args[i], b.args[i], s)) return std::nullopt;
  return s;
}

Rule standardize_apart(const Rule& r, const std::set<std::string>& avoid) {
  std::vector<std::string> order;
  std::set<std::string> originals;
  for (const Term& t : r.head.args) collect_ordered_vars(t, order, originals);
  for (const Literal& l : r.body)
    for (const Term& t : l.atom.args) collect_ordered_vars(t, order, originals);

  Substitution renaming;
  std::set<std::string> taken;
  for (const std::string& v : order) {
    int k = 0;
    std::string fresh;
    do {
      ++k;
      fresh = v + std::to_string(k);
    } while (avoid.count(fresh) || originals.count(fresh) || taken.count(fresh));
    taken.insert(fresh);
    renaming.bind(v, Term::variable(fresh));
  }
  return apply(renaming, r);
}

}  // namespace fp2
