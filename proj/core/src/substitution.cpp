#include "fp2/substitution.hpp"

#include <sstream>

namespace fp2 {

const Term* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::bind(const std::string& var, const Term& value) {
  Substitution single;
  single.bindings_.emplace(var, value);
  for (auto& [v, img] : bindings_) img = apply(single, img);
  if (!(value.is_variable() && value.name() == var))
    bindings_.insert_or_assign(var, value);
}

Substitution Substitution::restricted_to(const std::set<std::string>& vars) const {
  Substitution out;
  for (const auto& [v, img] : bindings_)
    if (vars.count(v)) out.bindings_.emplace(v, img);
  return out;
}

Term apply(const Substitution& s, const Term& t) {
  if (t.is_variable()) {
    if (const Term* img = s.lookup(t.name())) return *img;
    return t;
  }
  if (t.is_ground()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply(s, a));
  return Term::function(t.name(), std::move(args));
}

TermVec apply(const Substitution& s, const TermVec& ts) {
  TermVec out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(apply(s, t));
  return out;
}

Atom apply(const Substitution& s, const Atom& a) {
  return Atom{a.predicate, apply(s, a.args)};
}

Literal apply(const Substitution& s, const Literal& l) {
  return Literal{l.negative, apply(s, l.atom)};
}

Rule apply(const Substitution& s, const Rule& r) {
  Rule out;
  out.head = apply(s, r.head);
  out.body.reserve(r.body.size());
  for (const Literal& l : r.body) out.body.push_back(apply(s, l));
  return out;
}

Substitution compose(const Substitution& first, const Substitution& then) {
  Substitution out;
  for (const auto& [v, img] : first.bindings()) {
    Term rewritten = apply(then, img);
    if (!(rewritten.is_variable() && rewritten.name() == v))
      out.bind(v, rewritten);
  }
  for (const auto& [v, img] : then.bindings())
    if (!first.lookup(v)) out.bind(v, img);
  return out;
}

namespace {

bool match_into(const Term& pattern, const Term& instance, Substitution& s) {
  if (pattern.is_variable()) {
    if (const Term* bound = s.lookup(pattern.name()))
      return *bound == instance;
    s.bind(pattern.name(), instance);
    return true;
  }
  if (instance.is_variable()) return false;
  if (pattern.name() != instance.name() ||
      pattern.arity() != instance.arity())
    return false;
  for (int i = 0; i < pattern.arity(); ++i)
    if (!match_into(pattern.args()[i], instance.args()[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& instance) {
  Substitution s;
  if (!match_into(pattern, instance, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> match(const Atom& pattern, const Atom& instance) {
  if (pattern.predicate != instance.predicate ||
      pattern.arity() != instance.arity())
    return std::nullopt;
  Substitution s;
  for (int i = 0; i < pattern.arity(); ++i)
    if (!match_into(pattern.args[i], instance.args[i], s)) return std::nullopt;
  return s;
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, img] : s.bindings()) {
    if (!first) os << ", ";
    first = false;
    os << v << '=' << img;
  }
  os << '}';
  return os.str();
}

}  // namespace fp2
