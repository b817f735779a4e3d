#include "fp2/syntax.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

namespace fp2 {

Term Term::variable(std::string name) {
  assert(!name.empty());
  Term t;
  t.variable_ = true;
  t.name_ = std::move(name);
  return t;
}

Term Term::function(std::string functor, std::vector<Term> args) {
  assert(!functor.empty());
  Term t;
  t.variable_ = false;
  t.name_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

bool Term::is_ground() const {
  if (variable_) return false;
  for (const Term& a : args_)
    if (!a.is_ground()) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.variable_ <=> b.variable_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i)
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

bool Atom::is_ground() const {
  for (const Term& t : args)
    if (!t.is_ground()) return false;
  return true;
}

Term make_nil() { return Term::function(kNilFunctor); }

Term make_cons(Term head, Term tail) {
  std::vector<Term> args;
  args.push_back(std::move(head));
  args.push_back(std::move(tail));
  return Term::function(kConsFunctor, std::move(args));
}

Term make_list(std::vector<Term> elements) {
  Term t = make_nil();
  for (auto it = elements.rbegin(); it != elements.rend(); ++it)
    t = make_cons(std::move(*it), std::move(t));
  return t;
}

bool is_builtin_eq(const Atom& a) {
  return a.predicate == kEqPredicate && a.arity() == 2;
}

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

void collect_variables(const TermVec& ts, std::set<std::string>& out) {
  for (const Term& t : ts) collect_variables(t, out);
}

void collect_variables(const Atom& a, std::set<std::string>& out) {
  collect_variables(a.args, out);
}

void collect_variables(const Literal& l, std::set<std::string>& out) {
  collect_variables(l.atom, out);
}

void collect_variables(const Rule& r, std::set<std::string>& out) {
  collect_variables(r.head, out);
  for (const Literal& l : r.body) collect_variables(l, out);
}

std::set<std::string> variables_of(const Term& t) {
  std::set<std::string> out;
  collect_variables(t, out);
  return out;
}

std::set<std::string> variables_of(const TermVec& ts) {
  std::set<std::string> out;
  collect_variables(ts, out);
  return out;
}

std::set<std::string> variables_of(const Atom& a) {
  std::set<std::string> out;
  collect_variables(a, out);
  return out;
}

std::set<std::string> variables_of(const Rule& r) {
  std::set<std::string> out;
  collect_variables(r, out);
  return out;
}

std::set<Predicate> predicates_of(const Program& p) {
  std::set<Predicate> out;
  for (const Rule& r : p.rules) {
    out.insert(r.head.pred());
    for (const Literal& l : r.body)
      if (!is_builtin_eq(l.atom)) out.insert(l.atom.pred());
  }
  return out;
}

namespace {

void collect_functions(const Term& t, std::set<std::pair<std::string, int>>& out) {
  if (t.is_function()) {
    out.insert({t.name(), t.arity()});
    for (const Term& a : t.args()) collect_functions(a, out);
  }
}

}  // namespace

std::set<std::pair<std::string, int>> functions_of(const Program& p) {
  std::set<std::pair<std::string, int>> out;
  for (const Rule& r : p.rules) {
    for (const Term& t : r.head.args) collect_functions(t, out);
    for (const Literal& l : r.body)
      for (const Term& t : l.atom.args) collect_functions(t, out);
  }
  return out;
}

namespace {

void print_term(std::ostream& os, const Term& t);

void print_list(std::ostream& os, const Term& t) {
  // t is a cons/2 cell.
  os << '[';
  const Term* cur = &t;
  bool first = true;
  while (cur->is_function() && cur->name() == kConsFunctor && cur->arity() == 2) {
    if (!first) os << ',';
    first = false;
    print_term(os, cur->args()[0]);
    cur = &cur->args()[1];
  }
  if (!(cur->is_function() && cur->name() == kNilFunctor && cur->arity() == 0)) {
    os << '|';
    print_term(os, *cur);
  }
  os << ']';
}

void print_term(std::ostream& os, const Term& t) {
  if (t.is_variable()) {
    os << t.name();
    return;
  }
  if (t.name() == kConsFunctor && t.arity() == 2) {
    print_list(os, t);
    return;
  }
  if (t.name() == kNilFunctor && t.arity() == 0) {
    os << "[]";
    return;
  }
  if (t.name() == "/" && t.arity() == 2) {
    print_term(os, t.args()[0]);
    os << '/';
    print_term(os, t.args()[1]);
    return;
  }
  os << t.name();
  if (t.arity() > 0) {
    os << '(';
    for (int i = 0; i < t.arity(); ++i) {
      if (i > 0) os << ',';
      print_term(os, t.args()[i]);
    }
    os << ')';
  }
}

void print_atom(std::ostream& os, const Atom& a) {
  if (is_builtin_eq(a)) {
    print_term(os, a.args[0]);
    os << '=';
    print_term(os, a.args[1]);
    return;
  }
  os << a.predicate;
  if (a.arity() > 0) {
    os << '(';
    for (int i = 0; i < a.arity(); ++i) {
      if (i > 0) os << ',';
      print_term(os, a.args[i]);
    }
    os << ')';
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print_term(os, t);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  print_atom(os, a);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
  if (l.negative) os << "not ";
  print_atom(os, l.atom);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Rule& r) {
  print_atom(os, r.head);
  if (!r.body.empty()) {
    os << " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i > 0) os << ", ";
      os << r.body[i];
    }
  }
  os << '.';
  return os;
}

std::ostream& operator<<(std::ostream& os, const Predicate& p) {
  return os << p.name << '/' << p.arity;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string to_string(const Literal& l) {
  std::ostringstream os;
  os << l;
  return os.str();
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const Rule& r : p.rules) os << r << '\n';
  return os.str();
}

std::string to_string(const Predicate& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace fp2
