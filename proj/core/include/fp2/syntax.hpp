#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace fp2 {

/// A first-order term: either a variable or a function application.
/// Constants are 0-ary function applications. The same name may be used
/// with several arities; each (name, arity) pair is a distinct symbol.
class Term {
 public:
  static Term variable(std::string name);
  static Term function(std::string functor, std::vector<Term> args = {});
  static Term constant(std::string name) { return function(std::move(name)); }

  bool is_variable() const { return variable_; }
  bool is_function() const { return !variable_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  int arity() const { return static_cast<int>(args_.size()); }
  bool is_ground() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b);

 private:
  Term() = default;
  bool variable_ = false;
  std::string name_;
  std::vector<Term> args_;
};

using TermVec = std::vector<Term>;

/// Predicate identity is the (name, arity) pair.
struct Predicate {
  std::string name;
  int arity = 0;
  friend auto operator<=>(const Predicate&, const Predicate&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  int arity() const { return static_cast<int>(args.size()); }
  Predicate pred() const { return Predicate{predicate, arity()}; }
  bool is_ground() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Literal {
  bool negative = false;
  Atom atom;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// A rule `head :- body`. Body order is significant: call-safety is
/// checked against the written order.
struct Rule {
  Atom head;
  std::vector<Literal> body;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct Program {
  std::vector<Rule> rules;
};

// List sugar is desugared at parse time; these are the underlying symbols.
inline constexpr const char* kNilFunctor = "nil";
inline constexpr const char* kConsFunctor = "cons";
inline constexpr const char* kEqPredicate = "=";

Term make_nil();
Term make_cons(Term head, Term tail);
Term make_list(std::vector<Term> elements);

/// True for the built-in equality atom `s=t`.
bool is_builtin_eq(const Atom& a);

void collect_variables(const Term& t, std::set<std::string>& out);
void collect_variables(const TermVec& ts, std::set<std::string>& out);
void collect_variables(const Atom& a, std::set<std::string>& out);
void collect_variables(const Literal& l, std::set<std::string>& out);
void collect_variables(const Rule& r, std::set<std::string>& out);

std::set<std::string> variables_of(const Term& t);
std::set<std::string> variables_of(const TermVec& ts);
std::set<std::string> variables_of(const Atom& a);
std::set<std::string> variables_of(const Rule& r);

/// Predicate symbols occurring in the program, built-in `=` excluded.
std::set<Predicate> predicates_of(const Program& p);
/// Function symbols (name, arity) occurring in the program, constants included.
std::set<std::pair<std::string, int>> functions_of(const Program& p);

// Canonical printing: no spaces inside terms, `, ` between body literals,
// ` :- ` separator, trailing `.`. cons/nil print in list sugar, binary `/`
// prints infix, `=` atoms print infix.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);
std::string to_string(const Predicate& p);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Rule& r);
std::ostream& operator<<(std::ostream& os, const Predicate& p);

}  // namespace fp2
