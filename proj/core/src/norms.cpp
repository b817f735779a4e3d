#include "fp2/norms.hpp"

namespace fp2 {

int norm(const Term& t) {
  if (t.is_variable()) return 1;
  int n = 1;
  for (const Term& a : t.args()) n += norm(a);
  return n;
}

int norm(const TermVec& ts) {
  int n = 0;
  for (const Term& t : ts) n += norm(t);
  return n;
}

int nocc(const Symbol& s, const Term& t) {
  int n = 0;
  if (t.is_variable()) {
    return (s.kind == Symbol::Kind::variable && s.name == t.name()) ? 1 : 0;
  }
  if (s.kind == Symbol::Kind::function && s.name == t.name() &&
      s.arity == t.arity())
    n = 1;
  for (const Term& a : t.args()) n += nocc(s, a);
  return n;
}

int nocc(const Symbol& s, const TermVec& ts) {
  int n = 0;
  for (const Term& t : ts) n += nocc(s, t);
  return n;
}

CompareResult compare(const TermVec& t, const TermVec& u) {
  std::set<std::string> vars = variables_of(t);
  collect_variables(u, vars);

  bool all_leq = true;
  bool all_less = true;
  for (const std::string& v : vars) {
    int in_t = nocc(Symbol::var(v), t);
    int in_u = nocc(Symbol::var(v), u);
    if (in_t > in_u) all_leq = false;
    if (in_t >= in_u) all_less = false;
  }

  int nt = norm(t);
  int nu = norm(u);
  CompareResult r;
  r.strict_less = nt < nu && all_leq;
  r.less_eq = nt <= nu && all_leq;
  r.almost_never_larger = r.less_eq || all_less;
  return r;
}

}  // namespace fp2
